"""Reed-Solomon evaluation codes over a FieldContext.

A codeword is the value vector (f(alpha_1), ..., f(alpha_n)) of a message
polynomial f with deg f < k.  The canonical full-length code evaluates at every
field element, ordered alpha_1 = 0 followed by the remaining elements in
ascending integer encoding; node indices are 1-based throughout.
"""
from __future__ import annotations

import random

from .fieldmath import FieldContext, poly_deg, poly_eval, poly_mul, poly_trim


class RSCode:
    """RS(eval_points, k) over ctx; immutable."""

    def __init__(self, ctx: FieldContext, eval_points, k: int):
        points = tuple(eval_points)
        for a in points:
            ctx._check_element(a)
        if len(set(points)) != len(points):
            raise ValueError("evaluation points must be distinct")
        if not 1 <= k < len(points):
            raise ValueError(f"need 1 <= k < n, got k={k}, n={len(points)}")
        self.ctx = ctx
        self.eval_points = points
        self.k = k

    @classmethod
    def full_length(cls, ctx: FieldContext, k: int) -> "RSCode":
        return cls(ctx, range(ctx.order), k)

    @property
    def n(self) -> int:
        return len(self.eval_points)

    @property
    def is_full_length(self) -> bool:
        return self.n == self.ctx.order

    def encode(self, message) -> list[int]:
        """Evaluate the message polynomial (coefficients ascending) at every node."""
        if poly_deg(message) >= self.k:
            raise ValueError(f"message degree {poly_deg(message)} >= k={self.k}")
        return [poly_eval(self.ctx, message, a) for a in self.eval_points]

    def interpolate(self, symbols) -> list[int]:
        """Coefficients of the unique degree < n polynomial through all n symbols."""
        ctx = self.ctx
        symbols = list(symbols)
        if len(symbols) != self.n:
            raise ValueError(f"expected {self.n} symbols, got {len(symbols)}")
        master = [1]
        for a in self.eval_points:
            master = poly_mul(ctx, master, [ctx.neg(a), 1])
        out = [0] * self.n
        for a, y in zip(self.eval_points, symbols):
            if y == 0:
                continue
            # quotient master / (x - a) by synthetic division, then scale
            quot = [0] * self.n
            carry = master[self.n]
            for d in range(self.n - 1, -1, -1):
                quot[d] = carry
                carry = ctx.add(master[d], ctx.mul(a, carry))
            scale = ctx.mul(y, ctx.inv(poly_eval(ctx, quot, a)))
            for d in range(self.n):
                out[d] = ctx.add(out[d], ctx.mul(scale, quot[d]))
        return poly_trim(out)

    def is_codeword(self, symbols) -> bool:
        return poly_deg(self.interpolate(symbols)) < self.k

    def dual(self) -> "RSCode":
        """The dual code; defined here only for full-length codes, where it is
        the evaluation code of dimension n - k on the same points."""
        if not self.is_full_length:
            raise ValueError("dual is only available for the full-length code")
        return RSCode(self.ctx, self.eval_points, self.n - self.k)

    def random_message(self, seed: int) -> list[int]:
        rng = random.Random(seed)
        return [rng.randrange(self.ctx.order) for _ in range(self.k)]

    def random_codeword(self, seed: int) -> list[int]:
        return self.encode(self.random_message(seed))

    def __repr__(self) -> str:
        return f"RSCode(q={self.ctx.q}, ell={self.ctx.ell}, n={self.n}, k={self.k})"
