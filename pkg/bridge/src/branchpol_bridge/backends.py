"""Parser backends: a real UD toolkit when available, rules otherwise.

Every backend turns one lowercased text into CoNLL-U for all of its
sentences. The stanza backend needs the language model already on disk
(models are not downloaded here); the rule backend is deterministic and
dependency-free.
"""

from __future__ import annotations

from . import rules


class ModelUnavailable(RuntimeError):
    """The requested parsing toolkit or language model is not installed."""


class RuleBackend:
    """Built-in deterministic analyzer (Spanish review domain only)."""

    def __init__(self, language: str = "es"):
        if language != "es":
            raise ModelUnavailable(f"rule backend only covers 'es', not {language!r}")
        self.name = "rules-es-0.1"

    def parse(self, text: str) -> str:
        return rules.analyze(text)


class StanzaBackend:
    """Adapter over a locally installed stanza pipeline."""

    def __init__(self, language: str = "es"):
        try:
            import stanza
        except ImportError as err:
            raise ModelUnavailable("stanza is not installed") from err
        try:
            self._pipeline = stanza.Pipeline(
                lang=language,
                processors="tokenize,mwt,pos,lemma,depparse",
                download_method=None,
                verbose=False,
            )
        except Exception as err:
            raise ModelUnavailable(f"no {language!r} stanza model available: {err}") from err
        self.name = f"stanza-{stanza.__version__}-{language}"

    def parse(self, text: str) -> str:
        document = self._pipeline(text)
        return "{:C}".format(document) + "\n"


BACKENDS = {"rules": RuleBackend, "stanza": StanzaBackend}


def make_backend(name: str, language: str = "es"):
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}, expected one of {sorted(BACKENDS)}")
    return BACKENDS[name](language)
