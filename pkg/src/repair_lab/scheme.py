"""Linear repair schemes for one erased Reed-Solomon symbol, and their costs.

A scheme for node i* is a list of ell dual codewords, given as polynomials of
degree < n - k.  Each helper node i stores its symbol as ell subsymbols (the
working-basis coordinates); the scheme induces an ell x ell I/O matrix over B at
every node whose rows are the dual-basis coordinate vectors of the dual codeword
values there.  Repairing reads, at helper i, exactly the subsymbols under the
nonzero columns of that matrix:

- bandwidth (subsymbols transmitted) sums the matrix ranks over the helpers;
- I/O cost (subsymbols read) sums the nonzero-column counts over the helpers.

The I/O cost is also computed by a second, independent route: the total Hamming
weight of the row space of all per-node matrices stacked side by side, divided by
q^(ell-1) * (q-1), minus ell.  Keeping both routes separate is the point of this
module; nothing may shortcut one through the other.

Node indices, subsymbol indices, and dual-codeword indices are 1-based in every
public interface, matching the storage convention (node 1 holds the evaluation
at zero for full-length codes).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .fieldmath import FieldContext, coset_weight, poly_deg, poly_eval, poly_shift, poly_trim
from .rs import RSCode


@dataclass
class CostReport:
    """Everything one repair costs: per-helper matrix summaries plus the totals
    by both routes.  `per_node` rows are dicts {"i", "rank", "nz", "cols"} with
    1-based node and column indices, helpers only."""

    q: int
    ell: int
    n: int
    k: int
    node: int
    bandwidth: int
    io_cost: int
    io_cost_formula: int
    per_node: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "ell": self.ell,
            "n": self.n,
            "k": self.k,
            "node": self.node,
            "bandwidth": self.bandwidth,
            "io_cost": self.io_cost,
            "io_cost_formula": self.io_cost_formula,
            "per_node": [dict(row) for row in self.per_node],
        }


class RepairScheme:
    """ell dual codewords targeting one node of an RS code; immutable."""

    def __init__(self, code: RSCode, star: int, duals):
        ctx = code.ctx
        if not 1 <= star <= code.n:
            raise ValueError(f"node index must be in 1..{code.n}, got {star}")
        duals = [poly_trim(g) for g in duals]
        if len(duals) != ctx.ell:
            raise ValueError(f"need exactly ell={ctx.ell} dual codewords, got {len(duals)}")
        for g in duals:
            for c in g:
                ctx._check_element(c)
        self.code = code
        self.ctx = ctx
        self.star = star
        self.duals = [tuple(g) for g in duals]
        self.evals = [
            tuple(poly_eval(ctx, g, a) for a in code.eval_points) for g in self.duals
        ]
        self._recon: list[int] | None = None

    # ---- validity ------------------------------------------------------------

    def validate(self) -> str | None:
        """None if the scheme is well formed, else the first violation found."""
        bound = self.code.n - self.code.k - 1
        for j, g in enumerate(self.duals, start=1):
            if poly_deg(g) > bound:
                return (
                    f"dual codeword {j} has degree {poly_deg(g)}, "
                    f"outside the dual code (max {bound})"
                )
        coords = [list(self.ctx.digits(ev[self.star - 1])) for ev in self.evals]
        r = linalg.rank(coords, self.ctx.q)
        if r != self.ctx.ell:
            return (
                f"dual codeword values at node {self.star} span dimension "
                f"{r} < {self.ctx.ell}; the erased symbol is not recoverable"
            )
        return None

    def require_valid(self) -> None:
        violation = self.validate()
        if violation is not None:
            raise ValueError(violation)

    # ---- per-node I/O matrices -------------------------------------------------

    def io_matrix(self, i: int) -> list[list[int]]:
        """ell x ell matrix over B at node i: row j holds the dual-basis
        coordinates of the j-th dual codeword's value there."""
        if not 1 <= i <= self.code.n:
            raise ValueError(f"node index must be in 1..{self.code.n}, got {i}")
        return [list(self.ctx.dual_coords(ev[i - 1])) for ev in self.evals]

    def accessed_subsymbols(self, i: int) -> list[int]:
        """1-based indices of the subsymbols repair reads at helper i."""
        if i == self.star:
            raise ValueError("the failed node is not read")
        return [c + 1 for c in linalg.nonzero_columns(self.io_matrix(i))]

    def helpers(self) -> list[int]:
        return [i for i in range(1, self.code.n + 1) if i != self.star]

    def bandwidth(self) -> int:
        """Subsymbols transmitted: sum of I/O matrix ranks over the helpers."""
        q = self.ctx.q
        return sum(linalg.rank(self.io_matrix(i), q) for i in self.helpers())

    def io_cost_direct(self) -> int:
        """Subsymbols read: sum of nonzero-column counts over the helpers."""
        return sum(len(linalg.nonzero_columns(self.io_matrix(i))) for i in self.helpers())

    # ---- the weight-formula route ----------------------------------------------

    def stacked_io_matrix(self) -> list[list[int]]:
        """All per-node matrices side by side: ell rows, n*ell columns over B.
        Row j is the full subsymbol-coordinate vector of the j-th dual codeword."""
        return [
            [c for a in ev for c in self.ctx.dual_coords(a)] for ev in self.evals
        ]

    def io_cost_formula(self) -> int:
        """I/O cost via the row-space weight of the stacked matrix.

        total weight / (q^(ell-1) * (q-1)) counts the nonzero columns; the
        failed node always contributes exactly ell of them.  The division must
        be exact — a remainder means the implementation is inconsistent."""
        self.require_valid()
        q, ell = self.ctx.q, self.ctx.ell
        _, total = coset_weight(self.stacked_io_matrix(), None, q)
        denom = q ** (ell - 1) * (q - 1)
        if total % denom:
            raise ArithmeticError(
                f"row-space weight {total} not divisible by {denom}"
            )
        return total // denom - ell

    # ---- repair ------------------------------------------------------------------

    def _reconstruction_elements(self) -> list[int]:
        # mu_j with Tr(g_j(alpha_star) * mu_j') = 1 iff j == j': the columns of
        # the inverse of the failed node's I/O matrix, read in the working basis.
        if self._recon is None:
            ctx = self.ctx
            inv = linalg.inverse(self.io_matrix(self.star), ctx.q)
            self._recon = [
                ctx.from_basis_coords(inv[t][j] for t in range(ctx.ell))
                for j in range(ctx.ell)
            ]
        return self._recon

    def repair_transcript(self, symbols) -> tuple[int, dict[int, list[int]]]:
        """Repair the erased symbol, returning (value, subsymbols read per helper).

        `symbols` is the codeword with None at the failed position.  Each helper's
        stored subsymbols are its symbol's working-basis coordinates; only those
        under nonzero I/O matrix columns are touched, and the transcript records
        exactly which (1-based, per helper node index)."""
        self.require_valid()
        ctx, n, q, ell = self.ctx, self.code.n, self.ctx.q, self.ctx.ell
        symbols = list(symbols)
        if len(symbols) != n:
            raise ValueError(f"expected {n} symbols, got {len(symbols)}")
        if symbols[self.star - 1] is not None:
            raise ValueError(f"node {self.star} must be erased (None)")
        reads: dict[int, list[int]] = {}
        totals = [0] * ell
        for i in self.helpers():
            if symbols[i - 1] is None:
                raise ValueError(f"helper {i} is erased; only node {self.star} may be")
            w = self.io_matrix(i)
            cols = linalg.nonzero_columns(w)
            if not cols:
                continue
            stored = ctx.basis_coords(symbols[i - 1])
            reads[i] = [c + 1 for c in cols]
            for j in range(ell):
                row = w[j]
                totals[j] += sum(row[t] * stored[t] for t in cols)
        recon = self._reconstruction_elements()
        value = 0
        for j in range(ell):
            value = ctx.add(value, ctx.mul((-totals[j]) % q, recon[j]))
        return value, reads

    def execute_repair(self, symbols) -> int:
        """The erased symbol, recomputed from the helpers' subsymbols."""
        return self.repair_transcript(symbols)[0]

    # ---- translation to another node ------------------------------------------------

    def translate(self, target: int) -> "RepairScheme":
        """The same scheme moved to repair `target` by substituting x - alpha_target
        into every dual codeword.  Requires a full-length code and a scheme for
        node 1 (the zero evaluation point); degrees are preserved."""
        if not self.code.is_full_length:
            raise ValueError("translation requires the full-length code")
        if self.star != 1:
            raise ValueError("translation starts from a scheme for node 1")
        if not 1 <= target <= self.code.n:
            raise ValueError(f"node index must be in 1..{self.code.n}, got {target}")
        alpha = self.code.eval_points[target - 1]
        shift = self.ctx.neg(alpha)
        duals = [poly_shift(self.ctx, g, shift) for g in self.duals]
        return RepairScheme(self.code, target, duals)

    # ---- reporting ---------------------------------------------------------------------

    def cost_report(self) -> CostReport:
        q, ell = self.ctx.q, self.ctx.ell
        per_node = []
        bandwidth = 0
        io_cost = 0
        for i in self.helpers():
            w = self.io_matrix(i)
            rank = linalg.rank(w, q)
            cols = [c + 1 for c in linalg.nonzero_columns(w)]
            bandwidth += rank
            io_cost += len(cols)
            per_node.append({"i": i, "rank": rank, "nz": len(cols), "cols": cols})
        return CostReport(
            q=q,
            ell=ell,
            n=self.code.n,
            k=self.code.k,
            node=self.star,
            bandwidth=bandwidth,
            io_cost=io_cost,
            io_cost_formula=self.io_cost_formula(),
            per_node=per_node,
        )

    # ---- serialization -----------------------------------------------------------------

    def to_dict(self) -> dict:
        if not self.code.is_full_length:
            raise ValueError("only full-length schemes serialize")
        return {
            "q": self.ctx.q,
            "ell": self.ctx.ell,
            "modulus": list(self.ctx.modulus),
            "basis": list(self.ctx.basis),
            "n": self.code.n,
            "k": self.code.k,
            "star": self.star,
            "duals": [list(g) for g in self.duals],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RepairScheme":
        ctx = FieldContext(
            data["q"], data["ell"], data.get("modulus"), data.get("basis")
        )
        code = RSCode.full_length(ctx, data["k"])
        return cls(code, data["star"], data["duals"])

    def __repr__(self) -> str:
        return (
            f"RepairScheme(q={self.ctx.q}, ell={self.ctx.ell}, n={self.code.n}, "
            f"k={self.code.k}, node={self.star})"
        )
