"""Direct simulation of the circle rotation x -> {x + theta}.

The unit circle is split at rho into I_a = [0, rho) and I_b = [rho, 1);
coding an orbit over {a, b} is the ground truth that every closed-form
result elsewhere in the package is tested against.  A point (theta, rho)
is *critical* when some iterate of one partition endpoint hits the
other, i.e. i*theta = j + rho has an integer solution (i, j).  The
shortest such orbit segment (the centre) codes to the critical word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import ConsistencyError, CriticalityError, ParameterError
from .exact import Rational, fractional_part

# Words are plain strings over {a, b}; "" is the empty word.
Word = str


@dataclass(frozen=True)
class CriticalPoint:
    theta: Rational
    rho: Rational

    def __str__(self) -> str:  # pragma: no cover - debugging nicety
        return f"({self.theta}, {self.rho})"


def critical_point(theta: Rational, rho: Rational) -> CriticalPoint:
    """Validated constructor: raises unless (theta, rho) is critical."""
    ok, _ = is_critical(theta, rho)
    if not ok:
        raise CriticalityError(f"({theta}, {rho}) is not a critical point")
    return CriticalPoint(theta, rho)


def word_sign(word: Word) -> int:
    """+1 for a-initial words, -1 for b-initial; 0 for the empty word,
    which counts as both signs."""
    if not word:
        return 0
    return 1 if word[0] == "a" else -1


def switch_first(word: Word) -> Word:
    if not word:
        raise ParameterError("cannot switch the first letter of the empty word")
    head = "a" if word[0] == "b" else "b"
    return head + word[1:]


def format_word(word: Word) -> str:
    """Compact power notation: 'abbbabb' -> 'ab^3ab^2', '' -> 'ε'."""
    if not word:
        return "ε"
    out = []
    idx = 0
    while idx < len(word):
        run = idx
        while run < len(word) and word[run] == word[idx]:
            run += 1
        count = run - idx
        out.append(word[idx] if count == 1 else f"{word[idx]}^{count}")
        idx = run
    return "".join(out)


def parse_word(text: str) -> Word:
    """Inverse of format_word; also accepts plain 'abb' strings."""
    text = text.strip()
    if text in ("", "ε"):
        return ""
    out = []
    idx = 0
    while idx < len(text):
        letter = text[idx]
        if letter not in "ab":
            raise ParameterError(f"invalid word symbol {letter!r}")
        idx += 1
        if idx < len(text) and text[idx] == "^":
            idx += 1
            start = idx
            while idx < len(text) and text[idx].isdigit():
                idx += 1
            if start == idx:
                raise ParameterError(f"missing exponent in {text!r}")
            out.append(letter * int(text[start:idx]))
        else:
            out.append(letter)
    return "".join(out)


def code_orbit(theta: Rational, rho: Rational, x0: Rational, length: int) -> Word:
    """Code `length` steps of the orbit of x0 under rotation by theta.

    Symbol t is 'a' when x_t < rho, else 'b'.  x0 = 1 is the same circle
    point as 0 and is normalized on input.  The loop runs over integers
    scaled by the common denominator, which keeps long codings cheap.
    """
    if length < 0:
        raise ParameterError("length must be non-negative")
    for value, name in ((theta, "theta"), (rho, "rho"), (x0, "x0")):
        if not 0 <= value <= 1:
            raise ParameterError(f"{name} = {value} outside [0, 1]")
    if x0 == 1:
        x0 = Fraction(0)
    den = lcm(theta.denominator, rho.denominator, x0.denominator)
    step = theta.numerator * (den // theta.denominator)
    cut = rho.numerator * (den // rho.denominator)
    x = x0.numerator * (den // x0.denominator)
    symbols = []
    for _ in range(length):
        symbols.append("a" if x < cut else "b")
        x = (x + step) % den
    return "".join(symbols)


def is_critical(theta: Rational, rho: Rational) -> tuple[bool, tuple[int, int] | None]:
    """Decide i*theta = j + rho and hand back the witness (i, j).

    rho = 0 and rho = 1 carry the trivial solutions (0, 0) and (0, -1);
    otherwise the witness is the minimal i >= 1, found by walking the
    orbit of 0 (which visits every multiple of 1/q within q steps).
    """
    if not 0 <= theta <= 1 or not 0 <= rho <= 1:
        raise ParameterError("theta and rho must lie in [0, 1]")
    if rho == 0:
        return True, (0, 0)
    if rho == 1:
        return True, (0, -1)
    q = theta.denominator
    if q % rho.denominator:
        return False, None
    x = Fraction(0)
    for i in range(1, q + 1):
        x = fractional_part(x + theta)
        if x == rho:
            j = i * theta - rho
            return True, (i, int(j))
    raise ConsistencyError(
        f"divisibility says ({theta}, {rho}) is critical but the orbit scan missed it"
    )


def brute_force_critical_word(zeta: CriticalPoint, sign: int) -> tuple[Word, int, int]:
    """Minimal-|i| solution of i*theta = j + rho with the requested sign,
    together with the coding of its centre.

    Positive words code the orbit of 0 (i of the solution is positive),
    negative words the orbit of rho.  On the boundary rows the sign
    convention forces the trivial solution into one slot: at rho = 0 the
    positive answer is (ε, 0, 0) and at rho = 1 the negative answer is
    (ε, 0, -1); the opposite slots scan as usual and come out as b^q and
    a^q.
    """
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign!r}")
    theta, rho = zeta.theta, zeta.rho
    ok, _ = is_critical(theta, rho)
    if not ok:
        raise CriticalityError(f"({theta}, {rho}) is not a critical point")
    if rho == 0 and sign > 0:
        return "", 0, 0
    if rho == 1 and sign < 0:
        return "", 0, -1
    q = theta.denominator
    for size in range(1, q + 1):
        i = sign * size
        j = i * theta - rho
        if j.denominator == 1:
            start = Fraction(0) if sign > 0 else rho
            return code_orbit(theta, rho, start, size), i, int(j)
    raise ConsistencyError(
        f"no solution with sign {sign:+d} within period q = {q} at ({theta}, {rho})"
    )
