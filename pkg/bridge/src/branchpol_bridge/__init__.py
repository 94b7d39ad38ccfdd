"""branchpol-bridge: raw review CSVs -> CoNLL-U + manifest for branchpol."""

from .backends import ModelUnavailable, RuleBackend, StanzaBackend, make_backend
from .convert import MissingColumn, convert_corpus
from .rules import ParseFailure, analyze

__version__ = "0.1.0"
