"""Exact rational bound sequence and its companion offset function.

``beta(i)`` is the denominator in the guaranteed clique order
``floor(n / beta(alpha)) - 1``; ``f_of_alpha`` is the offset in
``beta(alpha) = 9/4 * alpha - f(alpha)``. Everything is ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction

_EXPLICIT = {1: Fraction(1), 2: Fraction(5, 2), 3: Fraction(9, 2), 4: Fraction(27, 4)}
NINE_QUARTERS = Fraction(9, 4)

# constants of the older general bound, kept exact
GLW_FACTOR = Fraction(177, 50)  # 3.54
GLW_OFFSET = Fraction(113, 100)  # 1.13


class BetaTable:
    """Precomputed ``beta_1..beta_max`` that extends itself on demand."""

    def __init__(self, max_index: int = 64):
        if max_index < 1:
            raise ValueError("max_index must be positive")
        self._values = [Fraction(0)]  # slot 0 unused
        self._harmonic = Fraction(0)  # sum_{j=6}^{i+1} 1/(2j) for the last i
        self._extend(max_index)

    def _extend(self, upto: int) -> None:
        while len(self._values) <= upto:
            i = len(self._values)
            if i in _EXPLICIT:
                self._values.append(_EXPLICIT[i])
                continue
            if i == 5:
                self._harmonic = Fraction(1, 12)
            else:
                self._harmonic += Fraction(1, 2 * (i + 1))
            self._values.append(NINE_QUARTERS * (i - 1) - self._harmonic)

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    def __getitem__(self, i: int) -> Fraction:
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"beta index must be a positive integer, got {i!r}")
        if i > self.max_index:
            self._extend(i)
        return self._values[i]

    def values(self) -> list[Fraction]:
        return self._values[1:]


_TABLE = BetaTable()


def beta(i: int) -> Fraction:
    return _TABLE[i]


def f_of_alpha(alpha: int) -> Fraction:
    if alpha < 3:
        raise ValueError("f is defined for alpha >= 3")
    return NINE_QUARTERS + sum((Fraction(1, 2 * i) for i in range(6, alpha + 2)),
                               Fraction(0))


def guarantee(n: int, alpha: int) -> int:
    """``floor(n / beta(alpha)) - 1``; may be zero or negative for tiny ``n``."""
    b = beta(alpha)
    return (n * b.denominator) // b.numerator - 1


def glw_bound(n: int, alpha: int) -> int:
    """``ceil(n / (3.54 alpha) - 1.13)`` computed exactly."""
    x = Fraction(n) / (GLW_FACTOR * alpha) - GLW_OFFSET
    return -((-x.numerator) // x.denominator)


def superadditivity_slack(i: int) -> dict[tuple[int, int], Fraction]:
    """``beta_i - beta_s - beta_t - (2i-1)/i`` for each split ``s + t = i``
    with ``2 <= s <= t <= i - 2``."""
    if i < 4:
        raise ValueError("superadditivity is stated for i >= 4")
    rhs = Fraction(2 * i - 1, i)
    return {(s, i - s): beta(i) - beta(s) - beta(i - s) - rhs
            for s in range(2, i // 2 + 1)}


def check_superadditivity(i: int) -> bool:
    return all(v >= 0 for v in superadditivity_slack(i).values())


def check_growth(i: int) -> bool:
    """``beta_i >= beta_{i-1} + 2``; required for every ``i >= 3``."""
    if i < 3:
        raise ValueError("growth condition is stated for i >= 3")
    return beta(i) >= beta(i - 1) + 2


def passes_threshold(set_size: int, n: int, alpha: int, s: int) -> bool:
    """``set_size >= beta(alpha - s) / beta(alpha) * n``, by cross-multiplication."""
    if not 1 <= s <= alpha - 1:
        raise ValueError("s must lie in 1..alpha-1")
    lo, hi = beta(alpha - s), beta(alpha)
    # set_size * hi >= lo * n with both sides scaled to integers
    return (set_size * hi.numerator * lo.denominator
            >= n * lo.numerator * hi.denominator)


def two_alpha_bound_holds(alpha: int) -> bool:
    """Whether ``9/4 alpha - f(alpha) <= 2 alpha``, i.e. the bound is at least
    ``floor(n / 2 alpha) - 1``."""
    return NINE_QUARTERS * alpha - f_of_alpha(alpha) <= 2 * alpha


def format_table(max_index: int) -> str:
    rows = [f"{'i':>3}  {'beta_i':>24}  {'decimal':>12}  {'f(i)':>24}"]
    for i in range(1, max_index + 1):
        b = beta(i)
        f = str(f_of_alpha(i)) if i >= 3 else "-"
        rows.append(f"{i:>3}  {str(b):>24}  {float(b):>12.6f}  {f:>24}")
    return "\n".join(rows)
