"""Memoized normal-form reduction of words under local two-letter rules.

A rule looks at two adjacent letters and either returns ``None`` (the pair
is already in normal order) or a list of ``(coeff, replacement_letters)``.
``normalize`` repeatedly rewrites one redex until no rule applies.  The
choice of redex is the ``strategy``: ``"leftmost"`` or ``"rightmost"``.
Confluence is not assumed; the test-suite compares both strategies.
"""

from __future__ import annotations

import sys

from .elem import add_term

STRATEGIES = ("leftmost", "rightmost")


class Rewriter:
    def __init__(self, ground, rule, strategy: str = "leftmost", max_steps: int = 10**6):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        self.ground = ground
        self.rule = rule
        self.strategy = strategy
        self.max_steps = max_steps
        self._memo: dict = {}
        self.steps = 0

    def _redex(self, word):
        rng = range(len(word) - 1)
        if self.strategy == "rightmost":
            rng = reversed(rng)
        for i in rng:
            out = self.rule(word[i], word[i + 1])
            if out is not None:
                return i, out
        return None

    def normalize(self, word: tuple) -> dict:
        """``{normal_word: coeff}`` equal to ``word``."""
        hit = self._memo.get(word)
        if hit is not None:
            return hit
        red = self._redex(word)
        if red is None:
            res = {word: self.ground.one}
        else:
            self.steps += 1
            if self.steps > self.max_steps:
                raise RuntimeError("rewriting did not terminate within step cap")
            i, terms = red
            res = {}
            pre, post = word[:i], word[i + 2:]
            for c, mid in terms:
                if not c:
                    continue
                for w, d in self.normalize(pre + tuple(mid) + post).items():
                    add_term(res, w, c * d)
        self._memo[word] = res
        return res


def _raise_recursion():
    # words are short, but nested expansion of long products recurses deeply
    if sys.getrecursionlimit() < 20000:
        sys.setrecursionlimit(20000)


_raise_recursion()
