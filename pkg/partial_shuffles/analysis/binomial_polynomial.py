"""BinomialPolynomial - 뉴턴(이항) 기저 p(n) = Σ c_k C(n,k), 정수 계수"""
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import sympy

from .catalan import binomial

N = sympy.Symbol("n", integer=True)


@dataclass(frozen=True)
class BinomialPolynomial:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        """영 다항식은 -1"""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def evaluate(self, n: int) -> int:
        return sum(c * binomial(n, k) for k, c in enumerate(self.coeffs))

    __call__ = evaluate

    def to_monomial(self) -> sympy.Expr:
        expr = sum((c * sympy.binomial(N, k) for k, c in enumerate(self.coeffs)), sympy.Integer(0))
        return sympy.expand(sympy.expand_func(expr))

    def evaluate_monomial(self, n: int) -> int:
        return int(self.to_monomial().subs(N, n))

    def to_dict(self) -> Dict[str, Any]:
        return {"basis": "binomial", "coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        terms = [(k, c) for k, c in reversed(list(enumerate(self.coeffs))) if c != 0]
        if not terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(terms):
            term = f"{abs(c)}·C(n,{k})"
            if i == 0:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)
