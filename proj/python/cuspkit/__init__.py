"""Python access to the cuspkit library.

Elements of the shuffle algebra are dicts mapping a word such as "12" to its coefficient in the
library's text form ("q{0}:1,1" means 1 + q). Exponents and weights are lists of ints.
"""

import json

from . import _cuspkit
from ._cuspkit import Error, InvariantViolation, adapted_word, beta_sequence, bilex_compare, positive_roots, reduced_words

__all__ = [
    "Error",
    "GlobalBasis",
    "InvariantViolation",
    "adapted_word",
    "ar_quiver",
    "beta_sequence",
    "bilex_compare",
    "cuspidal_line",
    "main",
    "positive_roots",
    "reduced_words",
    "run",
    "shuffle",
]


def run(*args):
    """Run a command line invocation in-process and return (exit_code, stdout, stderr)."""
    return _cuspkit.run([str(a) for a in args])


def shuffle(type, x, y):
    return json.loads(_cuspkit.shuffle(type, json.dumps(x), json.dumps(y)))


def ar_quiver(type, quiver, base=0):
    return json.loads(_cuspkit.ar_quiver(type, quiver, base))


def cuspidal_line(type, quiver, kmin, kmax, base=0):
    return json.loads(_cuspkit.cuspidal_line(type, quiver, kmin, kmax, base))


class GlobalBasis:
    """Dual PBW and global bases for one reduced word (the first one if none is given)."""

    def __init__(self, type, word=(), height_bound=6):
        self._impl = _cuspkit.GlobalBasis(type, list(word), height_bound)

    @property
    def word(self):
        return self._impl.word

    @property
    def betas(self):
        return self._impl.betas

    def weight_space(self, weight):
        return json.loads(self._impl._weight_space(list(weight)))

    def element(self, exponent):
        return json.loads(self._impl._element(list(exponent)))

    def pbw_monomial(self, exponent):
        return json.loads(self._impl._pbw_monomial(list(exponent)))

    def expand(self, element):
        return self._impl._expand(json.dumps(element))

    def label_of(self, element):
        return self._impl._label_of(json.dumps(element))

    def invariants(self, x, y):
        return json.loads(self._impl._invariants(list(x), list(y)))


def main():
    import sys

    code, out, err = run(*sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    raise SystemExit(code)
