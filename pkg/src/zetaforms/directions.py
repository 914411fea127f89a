"""Integer direction vectors: parameters that scale linearly with n."""

from __future__ import annotations

from dataclasses import dataclass

from .forms import ConditionError, ParamSet32, ParamSet33


@dataclass(frozen=True)
class Direction33:
    alpha: tuple[int, int, int, int]
    beta: tuple[int, int, int, int]

    def __post_init__(self):
        al, be = tuple(map(int, self.alpha)), tuple(map(int, self.beta))
        if len(al) != 4 or len(be) != 4:
            raise ConditionError("shape", "need four alphas and four betas")
        object.__setattr__(self, "alpha", al)
        object.__setattr__(self, "beta", be)
        if not (max(be[0], be[1]) < min(al) and max(al) < min(be[2], be[3])):
            raise ConditionError("ordering violated", "need {beta1,beta2} < {alpha} < {beta3,beta4}")
        if sum(al) > sum(be):
            raise ConditionError("sum condition violated", "need sum(alpha) <= sum(beta)")

    @property
    def balanced(self) -> bool:
        return sum(self.alpha) == sum(self.beta)

    def ordered(self):
        be = self.beta
        return tuple(sorted(self.alpha)), tuple(sorted(be[:2]) + sorted(be[2:]))

    def normalized(self) -> "Direction33":
        """Sorted alphas, beta1 <= beta2, beta3 <= beta4, and beta1 = 0."""
        al, be = self.ordered()
        s = be[0]
        return Direction33(tuple(x - s for x in al), tuple(x - s for x in be))

    def key(self) -> tuple[int, ...]:
        return self.alpha + self.beta

    def params(self, n: int) -> ParamSet33:
        b = tuple(x * n + 1 for x in self.beta[:2]) + tuple(x * n + 2 for x in self.beta[2:])
        return ParamSet33(tuple(x * n + 1 for x in self.alpha), b)

    def m_values(self) -> tuple[int, int, int, int]:
        al, be = self.alpha, self.beta
        (a1s, _, _, _), (_, _, b3s, b4s) = self.ordered()
        m0 = max(max(abs(x - y) for y in be) for x in al)
        m1 = b4s - a1s
        m2 = max(al[0] - be[0], al[1] - be[1], b4s - al[2], b4s - al[3], b3s - a1s)
        return m0, m1, m2, min(m1, m2)

    def __str__(self):
        return f"({','.join(map(str, self.alpha))}; {','.join(map(str, self.beta))})"


@dataclass(frozen=True)
class Direction32:
    alpha: tuple[int, int, int]
    beta: tuple[int, int, int]

    def __post_init__(self):
        al, be = tuple(map(int, self.alpha)), tuple(map(int, self.beta))
        if len(al) != 3 or len(be) != 3:
            raise ConditionError("shape", "need three alphas and three betas")
        object.__setattr__(self, "alpha", al)
        object.__setattr__(self, "beta", be)
        if not (be[0] < min(al) and max(al) < min(be[1], be[2])):
            raise ConditionError("ordering violated", "need beta1 < {alpha} < {beta2,beta3}")
        if sum(al) >= sum(be):
            raise ConditionError("sum condition violated", "need sum(alpha) < sum(beta)")

    def ordered(self):
        return tuple(sorted(self.alpha)), (self.beta[0],) + tuple(sorted(self.beta[1:]))

    def normalized(self) -> "Direction32":
        al, be = self.ordered()
        s = be[0]
        return Direction32(tuple(x - s for x in al), tuple(x - s for x in be))

    def key(self) -> tuple[int, ...]:
        return self.alpha + self.beta

    def params(self, n: int) -> ParamSet32:
        b = (self.beta[0] * n + 1,) + tuple(x * n + 2 for x in self.beta[1:])
        return ParamSet32(tuple(x * n + 1 for x in self.alpha), b)

    def m_values(self) -> tuple[int, int, int, int]:
        al, be = self.alpha, self.beta
        (a1s, _, _), (_, b2s, b3s) = self.ordered()
        entries = [sum(be) - sum(al)] + [abs(x - y) for x in al for y in be]
        m0 = max(entries)
        m1 = b3s - a1s
        m2 = max(al[0] - be[0], b3s - al[1], b3s - al[2], b2s - a1s)
        return m0, m1, m2, min(m1, m2)

    def __str__(self):
        return f"({','.join(map(str, self.alpha))}; {','.join(map(str, self.beta))})"
