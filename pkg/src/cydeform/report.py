"""Claim suite: run every numerical check for one n and collect a report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import comb

from .bundles import h0_bundle, h1_bundle, sym_pow, twist
from .filtration import (
    build_filtration,
    check_split_complement,
    dim_V,
    generic_multiplicity_along_C,
    lemma23_fiber_checks,
    quotient_bundle,
)
from .moduli import (
    DEFAULT_ISOMETRY_BOUND,
    aut_dim,
    cubic_form_on_X,
    lattice_isometries,
    moduli_report,
    nef_discriminator,
)
from .projbundle import (
    P1,
    P2,
    BlowupClass,
    DivisorClass,
    base_locus_of_t_system,
    blowup_check,
    codim_of_fiber_restriction,
    cohomology_pbundle,
    special_bundle,
    section_curve_from_quotient,
)
from .sections import image_of_psi, psi_prime_rank
from .surfaces import (
    SurfaceClass,
    fixed_component_decomposition,
    pairing,
    restrict_to_S,
    s4_summand_check,
)

__all__ = ["Claim", "ClaimReport", "run_suite", "run_range", "SCHEMA_VERSION"]

SCHEMA_VERSION = "cydeform-report/1"
DEFAULT_PSI_MAX_N = 5

INDEX_NOTE = (
    "The fibre-restriction diagram labels its top-right entry with G^(n-2)"
    " while the bottom row uses G^(n-1); the checks here use G^(n-1), the"
    " index that matches V."
)


@dataclass(frozen=True)
class Claim:
    id: str
    paper_ref: str
    expected: str
    computed: str
    status: str
    reason: str = ""


@dataclass
class ClaimReport:
    n: int
    claims: list[Claim] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def _check_id(self, id):
        if any(c.id == id for c in self.claims):
            raise ValueError(f"duplicate claim id {id!r}")

    def add(self, id, ref, expected, computed, ok=None):
        self._check_id(id)
        if ok is None:
            ok = _fmt(expected) == _fmt(computed)
        status = "pass" if ok else "fail"
        self.claims.append(Claim(id, ref, _fmt(expected), _fmt(computed), status))

    def skip(self, id, ref, expected, reason):
        self._check_id(id)
        self.claims.append(Claim(id, ref, _fmt(expected), "", "skipped", reason))

    @property
    def failed(self) -> list[Claim]:
        return [c for c in self.claims if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.claims:
            out[c.status] += 1
        return out

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "claims": [asdict(c) for c in self.claims],
            "notes": list(self.notes),
            "summary": self.counts(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def format_text(self) -> str:
        w_id = max(len(c.id) for c in self.claims)
        w_exp = max(len(c.expected) for c in self.claims)
        w_cmp = max(len(c.computed) for c in self.claims)
        lines = [f"n = {self.n}"]
        for c in self.claims:
            line = (
                f"  {c.status.upper():<7} {c.id:<{w_id}}  expected {c.expected:<{w_exp}}"
                f"  computed {c.computed:<{w_cmp}}  [{c.paper_ref}]"
            )
            if c.reason:
                line += f"  ({c.reason})"
            lines.append(line.rstrip())
        for note in self.notes:
            lines.append(f"  note: {note}")
        s = self.counts()
        lines.append(f"  {s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
        return "\n".join(lines)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def run_suite(
    n: int,
    psi_max_n: int = DEFAULT_PSI_MAX_N,
    isometry_bound: int = DEFAULT_ISOMETRY_BOUND,
) -> ClaimReport:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    rep = ClaimReport(n, notes=[INDEX_NOTE])
    P_1, P_2 = P1(n), P2(n)
    E = special_bundle(n)
    table = build_filtration(n)

    rep.add("split_complement", "S^(n+1)E = G^(n+2-p) + F^p", True,
            check_split_complement(table))
    rep.add("multiplicity", "general -K member has multiplicity floor(n/2) along C",
            n // 2, generic_multiplicity_along_C(table))
    h0 = table.h0_twisted
    rep.add("multiplicity_jump", "h0(G^(floor(n/2)+1)(2)) < h0(G^0(2))", True,
            h0[n // 2 + 1] < h0[0])

    Ep = quotient_bundle(n)
    three_pieces = (
        h0_bundle(twist(sym_pow(Ep, n + 1), 2))
        + h0_bundle(twist(sym_pow(Ep, n), 1))
        + h0_bundle(sym_pow(Ep, n - 1))
    )
    dv = dim_V(table)
    rep.add("dim_V_splitting", "G^(n-1)(2) = S^(n+1)E'(2) + S^nE'(1) + S^(n-1)E'",
            three_pieces, dv)
    rep.add("dim_V_generic", "dim V = generic-fibre h0 of S^(n+1)F(2)",
            3 * comb(2 * n + 1, n + 1), dv)

    rep.add("base_locus_t", "base locus of |t| on P_2 is the curve C", "O(-1)",
            base_locus_of_t_system(P_2, 0))
    rep.add("base_locus_t_plus_f", "|t+f| on P_2 is base-point-free", "0",
            base_locus_of_t_system(P_2, 1))
    rep.add("t_degree_on_C", "O(1) restricted to C is the quotient O(-1)", -1,
            section_curve_from_quotient(P_2, -1).t_deg)

    bc = blowup_check(P_2)
    rep.add("blowup_K", "K of the blow-up along C", BlowupClass(-(n + 1), -2, n - 1),
            bc.K_blowup)
    rep.add("blowup_K_resolution", "K of the proper transform vanishes",
            BlowupClass(0, 0, 0), bc.K_resolution_sum)
    rep.add("blowup_decomposition", "(n-1)(b*t - E) + 2 b*(t+f) is the proper transform",
            True, bc.decomposition_ok)

    rep.add("h1_E(-1)", "h1(O(t-f)) = h1(E(-1)) = 1", 1, h1_bundle(twist(E, -1)))
    rep.add("h1_E", "h1(O(t)) = h1(E) = 0", 0, h1_bundle(E))
    rep.add("h1_O(t-f)_on_P2", "h1(O(t-f)) on P_2", 1,
            cohomology_pbundle(P_2, DivisorClass(1, -1), 1))
    rep.add("codim_fiber_restriction", "image of H0(O(t)) in H0(O_f(t)) has codimension one",
            1, codim_of_fiber_restriction(P_2))
    K = P_2.canonical
    rep.add("canonical_class", "K = -(n+1)t - 2f", DivisorClass(-(n + 1), -2), K)
    rep.add("h2_omega", "h1(O_X) = h2(omega_P2) = 0", 0, cohomology_pbundle(P_2, K, 2))
    rep.add("h_top_omega", "h^(n+1)(omega_P2) = 1", 1, cohomology_pbundle(P_2, K, n + 1))

    l23 = lemma23_fiber_checks(n)
    rep.add("grauert_h0_t", "h0(O(t)) constant across the family", True, l23.h0_t_const)
    rep.add("grauert_h0_t_plus_f", "h0(O(t+f)) constant across the family", True,
            l23.h0_tf_const)
    rep.add("F3_fiber_vanishing", "F^3(2) is O(-1)^N on generic fibres", True,
            l23.F3_fiber_h0_zero)
    rep.add("dimV_eq_generic_h0", "im phi_0 = V dimension check", True,
            l23.dimV_eq_generic_h0)

    if n <= psi_max_n:
        rep.add("im_psi", "im psi = V", dv, image_of_psi(n, max_n=psi_max_n))
        rep.add("im_psi_prime", "psi' onto V from V_1 + V_2 + V_3", dv,
                psi_prime_rank(n, max_n=psi_max_n))
    else:
        reason = f"budget: n={n} > psi_max_n={psi_max_n}"
        rep.skip("im_psi", "im psi = V", dv, reason)
        rep.skip("im_psi_prime", "psi' onto V from V_1 + V_2 + V_3", dv, reason)

    a2 = aut_dim(E)
    a1 = aut_dim(P_1.E)
    rep.add("aut_entries", "(n-1)^2+2 constant, 2(n-1) linear, 1 quadratic entries",
            ((n - 1) ** 2 + 2, 2 * (n - 1), 1),
            (a2.constant_entries, a2.linear_entries, a2.quadratic_entries))
    rep.add("aut_P2", "dim Aut(P_2) = (n+1)^2 + 3", (n + 1) ** 2 + 3, a2.aut_dim)
    rep.add("aut_gap", "dim Aut(P_2) = dim Aut(P_1) + 1", 1, a2.aut_dim - a1.aut_dim)

    mr = moduli_report(n)
    diff = mr.h0_difference
    rep.add("h0_antiK_difference", "h0(-K_P2) >= h0(-K_P1) + 1, equality iff n = 3",
            "== 1" if n == 3 else "> 1", diff,
            ok=(diff == 1) if n == 3 else (diff > 1))
    rep.add("moduli_dims", "dim M_1 = h0 - 1 - dim Aut; dim M_2 at least the same count",
            (mr.h0_antiK_P1 - 1 - mr.aut_P1, mr.h0_antiK_P2 - 1 - mr.aut_P2),
            (mr.dim_M1, mr.dim_M2_lower))
    rep.add("gap_strict", "dim M_2 > dim M_1 for n > 3", n > 3, mr.gap_strict)

    if n == 3:
        _surface_claims(rep)
        _rigidity_claims(rep, isometry_bound)
    return rep


def _surface_claims(rep: ClaimReport) -> None:
    C = SurfaceClass.section(2)
    antiK = restrict_to_S(DivisorClass(4, 2))
    rep.add("surface_restriction", "-K_P2 restricted to S is 4C+6f", "4C+6f", antiK)
    rep.add("surface_C_squared", "C^2 = -2 on S", -2, pairing(C, C))
    dec = fixed_component_decomposition(antiK)
    rep.add("surface_decomposition", "general member of |4C+6f| is C + (3C+6f)",
            "1C+0f + 3C+6f", f"{dec.fixed} + {dec.mobile}")
    rep.add("surface_mobile_disjoint", "(3C+6f).C = 0", 0, pairing(dec.mobile, C))
    rep.add("surface_s4_summand", "S^4 E'' is a direct summand of S^4 E", True,
            s4_summand_check())


def _rigidity_claims(rep: ClaimReport, bound: int) -> None:
    f1 = cubic_form_on_X(P1(3))
    f2 = cubic_form_on_X(P2(3))
    rep.add("cubic_form_X1", "cubic form on X_1", (2, 4, 0, 0), f1.as_tuple())
    rep.add("cubic_form_X2", "cubic form on X_2", (2, 4, 0, 0), f2.as_tuple())
    isos = lattice_isometries(f2, bound)
    rep.add("cubic_isometries", f"only the identity preserves the form (bound {bound})",
            "[[1,0],[0,1]]", ";".join(_mat(m) for m in isos))
    nd = nef_discriminator(3)
    rep.add("nef_t_X1", "t is nef on X_1", True, nd.t_nef_on_X1)
    rep.add("nef_t_X2", "t is not nef on X_2", False, nd.t_nef_on_X2)


def _mat(m) -> str:
    return "[[{},{}],[{},{}]]".format(*(int(x) for x in m.ravel()))


def run_range(
    n_lo: int,
    n_hi: int,
    psi_max_n: int = DEFAULT_PSI_MAX_N,
    isometry_bound: int = DEFAULT_ISOMETRY_BOUND,
) -> list[ClaimReport]:
    if not 3 <= n_lo <= n_hi:
        raise ValueError(f"need 3 <= from <= to, got {n_lo}..{n_hi}")
    return [run_suite(n, psi_max_n, isometry_bound) for n in range(n_lo, n_hi + 1)]
