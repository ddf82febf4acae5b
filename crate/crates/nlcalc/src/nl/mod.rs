//! The codimension calculus: the Griffiths-Harris bound, Noether-Lefschetz
//! codimensions of configuration families, incremental induction steps, and
//! the adjunction-based audit of the degree window.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rank::PrimePolicy;
use crate::geometry::{
    intersection_count, tangent_family_dim, FamilyKind, FamilySpec, LineArrangement, PluckerLine,
};
use crate::ideal::{graded_slice, ideal_codim, semiregular};

/// Binomial coefficient C(n, 2), taken to be 0 for n < 2.
pub(crate) fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// The Griffiths-Harris lower bound `(r - 1)(d - 3) - C(r - 3, 2)` for the
/// codimension of the Noether-Lefschetz locus attached to a rank-`r` lattice
/// on surfaces of degree `d`.
pub fn gh_bound(r: i64, d: i64) -> Result<i64> {
    if r < 3 {
        return Err(Error::BadRank(r));
    }
    if d < 4 {
        return Err(Error::BadDegree(d));
    }
    Ok((r - 1) * (d - 3) - binom2(r - 3))
}

/// The classical range for components of the Noether-Lefschetz locus in
/// degree `d`: codimensions run from `d - 3` (the minimum, attained by
/// surfaces containing a line) to `C(d - 1, 3)` (the maximum).
pub fn classical_range(d: i64) -> (i64, i64) {
    assert!(d >= 4, "the locus is defined for degree at least 4");
    let max = (d - 1) * (d - 2) * (d - 3) / 6;
    (d - 3, max)
}

/// The elliptic-quartic-regime lower bound `3 + e(e + 3)/2` for components
/// whose generic surface contains a curve of degree `e > 1`.
pub fn eh_bound(e: i64) -> Result<i64> {
    if e <= 1 {
        return Err(Error::BadDegree(e));
    }
    Ok(3 + e * (e + 3) / 2)
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// How a family dimension was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    #[serde(rename = "closed-form")]
    ClosedForm,
    #[serde(rename = "tangent")]
    Tangent,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Tangent => "tangent",
        }
    }
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of comparing a computed codimension against the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "equality")]
    Equality,
    #[serde(rename = "strict")]
    Strict,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Equality => "equality",
            Verdict::Strict => "strict",
            Verdict::Violation => "VIOLATION",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One verified comparison: a configuration family of `k` lines (lattice
/// rank `r = k + 1`) against the Griffiths-Harris bound in degree `d`.
#[derive(Clone, Debug, Serialize)]
pub struct NLReport {
    pub family: String,
    pub k: usize,
    pub r: i64,
    pub d: i64,
    pub ideal_codim: i64,
    pub family_dim: i64,
    pub family_dim_provenance: Provenance,
    pub nl_codim: i64,
    pub gh_bound: i64,
    pub slack: i64,
    pub verdict: Verdict,
    pub certified: bool,
    pub seed: Option<u64>,
}

impl std::fmt::Display for NLReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} k={} r={} d={}: ideal_codim={} family_dim={} ({}) nl_codim={} \
             gh_bound={} slack={} [{}{}]",
            self.family,
            self.k,
            self.r,
            self.d,
            self.ideal_codim,
            self.family_dim,
            self.family_dim_provenance,
            self.nl_codim,
            self.gh_bound,
            self.slack,
            self.verdict,
            if self.certified { "" } else { ", uncertified" },
        )
    }
}

// ---------------------------------------------------------------------------
// The codimension comparison
// ---------------------------------------------------------------------------

/// Computes the full Noether-Lefschetz codimension report for a family in
/// degree `d`:
///
/// ```text
/// nl_codim = ideal_codim(witness, d) - family_dim,
/// slack    = nl_codim - gh_bound(k + 1, d).
/// ```
///
/// The ideal codimension always comes from a certified matrix rank, never
/// from a closed form. The report is `certified` only when the degree window
/// `d >= deg(C) + 4` holds and the semiregularity obstruction vanishes;
/// below the window the report is still computed, just not certified.
pub fn nl_codim(
    spec: &FamilySpec,
    d: i64,
    seed: Option<u64>,
    policy: PrimePolicy,
) -> Result<NLReport> {
    nl_codim_with_bias(spec, d, seed, policy, 0)
}

/// [`nl_codim`] with an additive perturbation of the family dimension. The
/// bias exists to exercise the violation-reporting path in tests; real
/// callers pass 0 (or use [`nl_codim`]).
pub fn nl_codim_with_bias(
    spec: &FamilySpec,
    d: i64,
    seed: Option<u64>,
    policy: PrimePolicy,
    bias: i64,
) -> Result<NLReport> {
    let k = spec.k();
    if k < 2 {
        return Err(Error::TooFewLines { min: 2, got: k });
    }
    let r = k as i64 + 1;
    let bound = gh_bound(r, d)?;
    let witness = spec.realize(seed)?;
    debug_assert_eq!(witness.len(), k);
    let slice = graded_slice(&witness, d, policy)?;
    let provenance = match spec.kind() {
        FamilyKind::Custom => Provenance::Tangent,
        _ => Provenance::ClosedForm,
    };
    let family_dim = crate::geometry::family_dim(spec)? + bias;
    let certified = semiregular(&witness, d, policy)?.holds;
    let nl = slice.ideal_codim - family_dim;
    let slack = nl - bound;
    let verdict = if slack == 0 {
        Verdict::Equality
    } else if slack > 0 {
        Verdict::Strict
    } else {
        Verdict::Violation
    };
    Ok(NLReport {
        family: spec.kind().name().to_string(),
        k,
        r,
        d,
        ideal_codim: slice.ideal_codim,
        family_dim,
        family_dim_provenance: provenance,
        nl_codim: nl,
        gh_bound: bound,
        slack,
        verdict,
        certified,
        seed: match spec.kind() {
            FamilyKind::Custom => None,
            _ => seed,
        },
    })
}

/// Verifies the Griffiths-Harris bound for one family and degree: errors
/// with [`Error::ViolationFound`] if the computed codimension falls below
/// the bound, and with [`Error::EqualityFailed`] if a coplanar family fails
/// to achieve exact equality. On success the report is returned.
pub fn verify_gh(
    spec: &FamilySpec,
    d: i64,
    seed: Option<u64>,
    policy: PrimePolicy,
) -> Result<NLReport> {
    verify_gh_with_bias(spec, d, seed, policy, 0)
}

/// [`verify_gh`] with the test-only family-dimension bias of
/// [`nl_codim_with_bias`].
pub fn verify_gh_with_bias(
    spec: &FamilySpec,
    d: i64,
    seed: Option<u64>,
    policy: PrimePolicy,
    bias: i64,
) -> Result<NLReport> {
    let report = nl_codim_with_bias(spec, d, seed, policy, bias)?;
    if report.slack < 0 {
        return Err(Error::ViolationFound(Box::new(report)));
    }
    if spec.kind() == FamilyKind::Coplanar && report.slack != 0 {
        return Err(Error::EqualityFailed(Box::new(report)));
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Incremental induction steps
// ---------------------------------------------------------------------------

/// The three cases of the one-line induction, classified by how many base
/// lines the new line misses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InductionCase {
    /// The new line meets every base line (`epsilon = 0`).
    #[serde(rename = "meets-all")]
    MeetsAll,
    /// The new line meets some but not all base lines (`0 < epsilon < k`).
    #[serde(rename = "partial")]
    Partial,
    /// The new line misses the base entirely (`epsilon = k`).
    #[serde(rename = "disjoint")]
    Disjoint,
}

impl InductionCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            InductionCase::MeetsAll => "meets-all",
            InductionCase::Partial => "partial",
            InductionCase::Disjoint => "disjoint",
        }
    }
}

impl std::fmt::Display for InductionCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One step of the induction that grows an arrangement a line at a time:
/// how the ideal codimension and the family dimension move, and the
/// resulting contribution to the codimension bound.
#[derive(Clone, Debug, Serialize)]
pub struct IncrementalStep {
    pub base_k: usize,
    pub d: i64,
    /// Number of base lines the new line meets (`m`).
    pub meets: usize,
    /// Number of base lines the new line misses (`epsilon = k - m`).
    pub epsilon: i64,
    pub case: InductionCase,
    pub base_ideal_codim: i64,
    pub extended_ideal_codim: i64,
    /// `extended_ideal_codim - base_ideal_codim`; equals `(d + 1) - m` in
    /// the stable range.
    pub codim_delta: i64,
    pub base_family_dim: i64,
    pub extended_family_dim: i64,
    /// Tangent-dimension increase `t` contributed by the new line (at most 4).
    pub tangent_delta: i64,
    /// `epsilon - t + 2 >= 0`: by how much the codimension gain beats the
    /// bound's gain when the lattice rank grows by one.
    pub contribution: i64,
    /// Whether `d` was large enough to assert the codimension recursion.
    pub additivity_checked: bool,
}

impl std::fmt::Display for IncrementalStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "k={} d={} m={} eps={} case={} codim {}->{} (delta {}) tangent {}->{} (t={}) \
             contribution={}",
            self.base_k,
            self.d,
            self.meets,
            self.epsilon,
            self.case,
            self.base_ideal_codim,
            self.extended_ideal_codim,
            self.codim_delta,
            self.base_family_dim,
            self.extended_family_dim,
            self.tangent_delta,
            self.contribution,
        )
    }
}

/// Analyzes one induction step: extends `base` by `new_line` in degree `d`,
/// computing the incidence count `m`, the miss count `epsilon`, the tangent
/// increment `t`, and the contribution `epsilon - t + 2`.
///
/// Soundness checks: when `d >= deg(base) + 1`, the codimension recursion
/// `ideal_codim(base + line) = ideal_codim(base) + (d + 1) - m` is asserted
/// (`AdditivityFailure` otherwise); a negative contribution raises
/// `ContributionNegative`. The new line must meet the base lines in `m`
/// distinct points — meeting two base lines at a shared point falls outside
/// the induction's transversality hypotheses and is rejected.
pub fn incremental_analysis(
    base: &LineArrangement,
    new_line: &PluckerLine,
    d: i64,
    policy: PrimePolicy,
) -> Result<IncrementalStep> {
    let k = base.len();
    if k < 2 {
        return Err(Error::TooFewLines { min: 2, got: k });
    }
    if d < 0 {
        return Err(Error::BadDegree(d));
    }
    let m = intersection_count(new_line, base)?;
    let extended = base.extended(new_line)?;

    // Transversality: the meet points on the new line must be distinct.
    let mut meet_points: Vec<[BigInt; 4]> = Vec::with_capacity(m);
    for i in 0..k {
        if extended.meets(i, k) {
            let pt = extended
                .intersection_point(i, k)
                .expect("incident lines have a common point");
            let key = pt.primitive();
            if !meet_points.contains(&key) {
                meet_points.push(key);
            }
        }
    }
    if meet_points.len() != m {
        return Err(Error::AdditivityFailure(format!(
            "extension line meets {k} base lines in only {} distinct points ({m} incidences); \
             a shared intersection point is outside the induction's transversality hypotheses",
            meet_points.len()
        )));
    }

    let base_codim = ideal_codim(base, d, policy)?;
    let ext_codim = ideal_codim(&extended, d, policy)?;
    let codim_delta = ext_codim - base_codim;
    let additivity_checked = d > k as i64;
    if additivity_checked && codim_delta != (d + 1) - m as i64 {
        return Err(Error::AdditivityFailure(format!(
            "codim recursion failed at k={k}, d={d}, m={m}: delta {codim_delta} != {}",
            (d + 1) - m as i64
        )));
    }

    let base_dim = tangent_family_dim(base);
    let ext_dim = tangent_family_dim(&extended);
    let tangent_delta = ext_dim - base_dim;
    let epsilon = (k - m) as i64;
    let case = if m == k {
        InductionCase::MeetsAll
    } else if m == 0 {
        InductionCase::Disjoint
    } else {
        InductionCase::Partial
    };
    let contribution = epsilon - tangent_delta + 2;
    if contribution < 0 {
        return Err(Error::ContributionNegative(format!(
            "k={k} d={d} m={m}: epsilon={epsilon}, t={tangent_delta}"
        )));
    }
    Ok(IncrementalStep {
        base_k: k,
        d,
        meets: m,
        epsilon,
        case,
        base_ideal_codim: base_codim,
        extended_ideal_codim: ext_codim,
        codim_delta,
        base_family_dim: base_dim,
        extended_family_dim: ext_dim,
        tangent_delta,
        contribution,
        additivity_checked,
    })
}

// ---------------------------------------------------------------------------
// Divisors and the adjunction audit
// ---------------------------------------------------------------------------

/// One component of an effective divisor supported on a curve in a surface:
/// multiplicity, degree, and genus of the reduced component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorComponent {
    pub multiplicity: i64,
    pub degree: i64,
    pub genus: i64,
}

/// An effective divisor with components `a_i C_i` on a surface of degree `d`,
/// together with the pairwise intersection numbers `C_i . C_j`.
#[derive(Clone, Debug)]
pub struct DivisorData {
    components: Vec<DivisorComponent>,
    intersections: Vec<Vec<i64>>,
}

/// Maximal genus of a reduced irreducible plane curve of degree `e`.
pub fn max_plane_genus(e: i64) -> i64 {
    binom2(e - 1)
}

impl DivisorData {
    pub fn new(components: Vec<DivisorComponent>, intersections: Vec<Vec<i64>>) -> Result<Self> {
        let n = components.len();
        if n == 0 {
            return Err(Error::BadDivisor("a divisor needs a component".into()));
        }
        if intersections.len() != n || intersections.iter().any(|row| row.len() != n) {
            return Err(Error::BadDivisor(format!(
                "intersection table must be {n} x {n}"
            )));
        }
        for (i, c) in components.iter().enumerate() {
            if c.multiplicity < 1 {
                return Err(Error::BadDivisor(format!(
                    "component {i} has multiplicity {} < 1",
                    c.multiplicity
                )));
            }
            if c.degree < 1 {
                return Err(Error::BadDivisor(format!(
                    "component {i} has degree {} < 1",
                    c.degree
                )));
            }
            if c.genus < 0 || c.genus > max_plane_genus(c.degree) {
                return Err(Error::BadDivisor(format!(
                    "component {i} has genus {} outside 0..={}",
                    c.genus,
                    max_plane_genus(c.degree)
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if intersections[i][j] != intersections[j][i] {
                    return Err(Error::BadDivisor(
                        "intersection table must be symmetric".into(),
                    ));
                }
                if i == j {
                    continue;
                }
                let max = components[i].degree * components[j].degree;
                if intersections[i][j] < 0 || intersections[i][j] > max {
                    return Err(Error::BadDivisor(format!(
                        "C{i}.C{j} = {} outside 0..={max}",
                        intersections[i][j]
                    )));
                }
            }
        }
        Ok(DivisorData {
            components,
            intersections,
        })
    }

    /// Divisor data for a line arrangement with the given multiplicities:
    /// every component is a line (degree 1, genus 0) and two lines meet in
    /// at most one point.
    pub fn from_arrangement(arr: &LineArrangement, multiplicities: &[i64]) -> Result<Self> {
        if multiplicities.len() != arr.len() {
            return Err(Error::BadDivisor(format!(
                "expected {} multiplicities, got {}",
                arr.len(),
                multiplicities.len()
            )));
        }
        let components = multiplicities
            .iter()
            .map(|&a| DivisorComponent {
                multiplicity: a,
                degree: 1,
                genus: 0,
            })
            .collect();
        let k = arr.len();
        let intersections = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| i64::from(i != j && arr.meets(i, j)))
                    .collect()
            })
            .collect();
        DivisorData::new(components, intersections)
    }

    pub fn components(&self) -> &[DivisorComponent] {
        &self.components
    }

    /// Total degree of the divisor, counted with multiplicity.
    pub fn total_degree(&self) -> i64 {
        self.components
            .iter()
            .map(|c| c.multiplicity * c.degree)
            .sum()
    }

    /// Degree of the adjoint restriction on component `i` inside a surface of
    /// degree `d`:
    /// `2 a_i p_i - 2 a_i - (d - 4) a_i e_i + sum_{j != i} a_j (C_i . C_j)`.
    pub fn adjunction_degree(&self, i: usize, d: i64) -> i64 {
        let c = &self.components[i];
        let cross: i64 = self
            .components
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(j, other)| other.multiplicity * self.intersections[i][j])
            .sum();
        2 * c.multiplicity * c.genus - 2 * c.multiplicity - (d - 4) * c.multiplicity * c.degree
            + cross
    }
}

/// Whether the divisor is forced rigid in degree `d`: the degree window
/// `d >= total_degree + 4` holds and every component's adjoint restriction
/// has negative degree.
pub fn check_small_linear_system(data: &DivisorData, d: i64) -> bool {
    d >= data.total_degree() + 4
        && (0..data.components().len()).all(|i| data.adjunction_degree(i, d) < 0)
}

// ---------------------------------------------------------------------------
// Degree-window audit
// ---------------------------------------------------------------------------

/// One row of the degree-window audit: for lattice rank `r` and degree `d`,
/// the codimension forced by a rank-`r` lattice (left side) must exceed the
/// space swept out by `r - 1` independent curve classes (right side).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AuditRow {
    pub r: i64,
    pub d: i64,
    pub lhs: i64,
    pub rhs: i64,
    pub margin: i64,
}

/// Audits the asymptotic degree window at a single `(r, d)` with `d >= r^3`.
pub fn gh4_audit_row(r: i64, d: i64) -> Result<AuditRow> {
    if r < 3 {
        return Err(Error::BadRank(r));
    }
    if d < r * r * r {
        return Err(Error::BadDegree(d));
    }
    let lhs = (r * d - (2 * r - 3) * (2 * r - 4) / 2 + 1) - (3 + (r - 1) * (2 * r + 1));
    let rhs = (r - 1) * d;
    if lhs <= rhs {
        return Err(Error::AuditFailure { r, d, lhs, rhs });
    }
    Ok(AuditRow {
        r,
        d,
        lhs,
        rhs,
        margin: lhs - rhs,
    })
}

/// Audits the window at the boundary degree `d = r^3` for each rank in
/// `r_min..=r_max`.
pub fn gh4_audit(r_min: i64, r_max: i64) -> Result<Vec<AuditRow>> {
    (r_min..=r_max.max(r_min))
        .map(|r| gh4_audit_row(r, r * r * r))
        .collect()
}


#[cfg(test)]
mod pure_tests {
    use super::*;
    use crate::geometry::{line_from_points, LineArrangement, ProjPoint};

    fn line(a: [i64; 4], b: [i64; 4]) -> crate::geometry::PluckerLine {
        line_from_points(
            &ProjPoint::from_ints(a).unwrap(),
            &ProjPoint::from_ints(b).unwrap(),
        )
        .unwrap()
    }

    fn triangle() -> LineArrangement {
        LineArrangement::new(vec![
            line([1, 0, 0, 0], [0, 1, 0, 0]),
            line([1, 0, 0, 0], [0, 0, 1, 0]),
            line([0, 1, 0, 0], [0, 0, 1, 0]),
        ])
        .unwrap()
    }

    #[test]
    fn gh_bound_rank_three_is_linear() {
        for d in 4..=40 {
            assert_eq!(gh_bound(3, d).unwrap(), 2 * d - 6);
        }
    }

    #[test]
    fn gh_bound_examples() {
        assert_eq!(gh_bound(4, 10).unwrap(), 21);
        assert_eq!(gh_bound(5, 12).unwrap(), 35);
        assert_eq!(gh_bound(3, 7).unwrap(), 8);
    }

    #[test]
    fn gh_bound_rejects_degenerate_input() {
        assert!(matches!(gh_bound(2, 10), Err(Error::BadRank(2))));
        assert!(matches!(gh_bound(3, 3), Err(Error::BadDegree(3))));
    }

    #[test]
    fn classical_range_examples() {
        assert_eq!(classical_range(4), (1, 1));
        assert_eq!(classical_range(5), (2, 4));
        assert_eq!(classical_range(6), (3, 10));
        // The rank-3 bound always sits inside the classical range.
        for d in 7..=30 {
            let (lo, hi) = classical_range(d);
            let b = gh_bound(3, d).unwrap();
            assert!(lo <= b && b <= hi);
        }
    }

    #[test]
    fn eh_bound_examples_and_domination() {
        assert_eq!(eh_bound(2).unwrap(), 8);
        assert_eq!(eh_bound(4).unwrap(), 17);
        assert!(matches!(eh_bound(1), Err(Error::BadDegree(1))));
        // For unions of k lines (degree e = k) the elliptic-quartic-regime
        // bound dominates the generic family dimension 4k, with equality
        // exactly at k = 2 and k = 3.
        for k in 2i64..=8 {
            let b = eh_bound(k).unwrap();
            assert!(b >= 4 * k, "k={k}: {b} < {}", 4 * k);
            assert_eq!(b == 4 * k, k == 2 || k == 3);
        }
    }

    #[test]
    fn audit_margins_at_cubic_boundary() {
        let rows = gh4_audit(3, 5).unwrap();
        let margins: Vec<i64> = rows.iter().map(|row| row.margin).collect();
        assert_eq!(margins, vec![8, 25, 58]);
        assert_eq!(rows[0].lhs, 62);
        assert_eq!(rows[0].rhs, 54);
        assert_eq!(rows[1].lhs, 217);
        assert_eq!(rows[1].rhs, 192);
        assert_eq!(rows[2].lhs, 558);
        assert_eq!(rows[2].rhs, 500);
    }

    #[test]
    fn audit_rejects_degrees_below_cubic_window() {
        assert!(matches!(gh4_audit_row(3, 26), Err(Error::BadDegree(26))));
        assert!(gh4_audit_row(3, 27).is_ok());
        assert!(matches!(gh4_audit_row(2, 8), Err(Error::BadRank(2))));
    }

    #[test]
    fn adjunction_examples() {
        // A single line in degree 5.
        let single = DivisorData::new(
            vec![DivisorComponent {
                multiplicity: 1,
                degree: 1,
                genus: 0,
            }],
            vec![vec![0]],
        )
        .unwrap();
        assert_eq!(single.adjunction_degree(0, 5), -3);
        // A triangle of lines in degree 7: each side meets the other two.
        let tri = DivisorData::from_arrangement(&triangle(), &[1, 1, 1]).unwrap();
        for i in 0..3 {
            assert_eq!(tri.adjunction_degree(i, 7), -3);
        }
        // A double line in degree 7.
        let double = DivisorData::new(
            vec![DivisorComponent {
                multiplicity: 2,
                degree: 1,
                genus: 0,
            }],
            vec![vec![0]],
        )
        .unwrap();
        assert_eq!(double.adjunction_degree(0, 7), -10);
    }

    #[test]
    fn small_linear_system_window_is_exact_for_reduced_arrangements() {
        let tri = DivisorData::from_arrangement(&triangle(), &[1, 1, 1]).unwrap();
        assert_eq!(tri.total_degree(), 3);
        for d in 4..=20 {
            assert_eq!(check_small_linear_system(&tri, d), d >= 7);
        }
    }

    #[test]
    fn divisor_validation() {
        // Genus above the plane maximum is rejected.
        assert!(DivisorData::new(
            vec![DivisorComponent {
                multiplicity: 1,
                degree: 3,
                genus: 2,
            }],
            vec![vec![0]],
        )
        .is_err());
        assert_eq!(max_plane_genus(3), 1);
        assert_eq!(max_plane_genus(4), 3);
        assert_eq!(max_plane_genus(5), 6);
        // Intersection numbers above degree products are rejected.
        assert!(DivisorData::new(
            vec![
                DivisorComponent {
                    multiplicity: 1,
                    degree: 1,
                    genus: 0,
                },
                DivisorComponent {
                    multiplicity: 1,
                    degree: 2,
                    genus: 0,
                },
            ],
            vec![vec![0, 3], vec![3, 0]],
        )
        .is_err());
        // Multiplicity mismatch against an arrangement is rejected.
        assert!(DivisorData::from_arrangement(&triangle(), &[1, 1]).is_err());
    }

    #[test]
    fn verdict_and_provenance_labels() {
        assert_eq!(Verdict::Equality.to_string(), "equality");
        assert_eq!(Verdict::Strict.to_string(), "strict");
        assert_eq!(Verdict::Violation.to_string(), "VIOLATION");
        assert_eq!(Provenance::ClosedForm.to_string(), "closed-form");
        assert_eq!(Provenance::Tangent.to_string(), "tangent");
    }
}
