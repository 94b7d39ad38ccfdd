"""branchpol: compositional sentiment scoring over dependency trees.

Scores CoNLL-U-parsed text bottom-up along head-child branches using
sentiment/intensifier/negator lexicons, aggregates sentence scores into
a review-level 5-class polarity, and ships a proximity-window baseline
plus an evaluation harness for comparing the two.
"""

from .aggregation import (
    AggregationMetric,
    BothEmpty,
    EmptyInput,
    Extreme,
    Mean,
    WeightedLast,
    aggregate,
    map_to_class,
    metric_from_name,
    select_input,
)
from .baseline import (
    ProportionScore,
    ThresholdVerdict,
    classify_threshold,
    score_proximity,
)
from .conllu import (
    ConlluError,
    HeadChildMap,
    InvalidTree,
    MalformedLine,
    Sentence,
    Token,
    branch_order,
    build_head_child_map,
    parse_conllu,
    parse_conllu_file,
    serialize_conllu,
)
from .evaluation import (
    BadPolarity,
    EmptyDataset,
    EvalReport,
    MissingColumn,
    ReviewRecord,
    compare_report,
    evaluate,
    filter_binary,
    load_dataset,
    predict_compositional,
    predict_proximity,
)
from .lexicon import (
    DuplicateLemma,
    Intensifier,
    LexiconError,
    LexiconSet,
    MalformedRow,
    Negator,
    Neutral,
    RoleConflict,
    ScoreOutOfRange,
    Sentiment,
    TokenRole,
    classify_token,
    load_lexicons,
)
from .scoring import (
    BranchTrace,
    SentenceScore,
    branch_polarity,
    preprocess,
    score_sentence,
)

__version__ = "0.1.0"
