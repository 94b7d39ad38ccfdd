"""Collapse per-sentence scores into one review score three different ways.

A mixed five-sentence review averages out near neutral, but its last
sentence carries the strongest signal; the three metrics disagree about
which of those matters.
"""

from branchpol import Extreme, Mean, WeightedLast, aggregate, map_to_class

sentence_scores = [-1, 2, -1, 1, -4]

for metric in (Mean(), WeightedLast(2.0), Extreme()):
    review = aggregate(sentence_scores, metric)
    print(f"{type(metric).__name__:<12} -> score {review:+.3f}  class {map_to_class(review)}")
