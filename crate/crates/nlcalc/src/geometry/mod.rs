//! Lines in projective 3-space: Plücker coordinates, incidence, arrangements,
//! and the configuration families whose dimensions enter the bound calculus.

pub mod witness;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{primitive_int_row, rank::rank, DenseMatrix, ExactScalar};

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

/// A point of projective 3-space with exact rational coordinates, normalized
/// so the first nonzero coordinate equals 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint {
    coords: [ExactScalar; 4],
}

impl ProjPoint {
    pub fn new(raw: [ExactScalar; 4]) -> Result<Self> {
        let Some(lead) = raw.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::ZeroPoint);
        };
        let coords = raw.map(|c| c / &lead);
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(raw: [i64; 4]) -> Result<Self> {
        Self::new(raw.map(crate::exact::scalar_int))
    }

    pub fn coords(&self) -> &[ExactScalar; 4] {
        &self.coords
    }

    /// Primitive integer representative: denominators cleared, content
    /// divided out, first nonzero coordinate positive.
    pub fn primitive(&self) -> [BigInt; 4] {
        let v = primitive_int_row(&self.coords);
        [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
    }

    /// Primitive representative as machine integers, when it fits.
    pub fn primitive_i64(&self) -> Option<[i64; 4]> {
        let p = self.primitive();
        Some([
            p[0].to_i64()?,
            p[1].to_i64()?,
            p[2].to_i64()?,
            p[3].to_i64()?,
        ])
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p = self.primitive();
        write!(f, "({} : {} : {} : {})", p[0], p[1], p[2], p[3])
    }
}

// ---------------------------------------------------------------------------
// Lines
// ---------------------------------------------------------------------------

/// A line in projective 3-space, stored as a spanning pair of points together
/// with its Plücker coordinate vector (p01, p02, p03, p12, p13, p23).
#[derive(Clone, Debug)]
pub struct PluckerLine {
    p: ProjPoint,
    q: ProjPoint,
    plucker: [ExactScalar; 6],
    prim_plucker: [BigInt; 6],
}

/// Plücker vector of an ordered pair of coordinate vectors (2x2 minors).
fn plucker_of(a: &[ExactScalar; 4], b: &[ExactScalar; 4]) -> [ExactScalar; 6] {
    let minor = |i: usize, j: usize| &a[i] * &b[j] - &a[j] * &b[i];
    [
        minor(0, 1),
        minor(0, 2),
        minor(0, 3),
        minor(1, 2),
        minor(1, 3),
        minor(2, 3),
    ]
}

/// The bilinear incidence pairing on Plücker vectors; it vanishes exactly
/// when the two lines meet (and on a line paired with itself).
fn omega_raw(a: &[ExactScalar; 6], b: &[ExactScalar; 6]) -> ExactScalar {
    &a[0] * &b[5] - &a[1] * &b[4] + &a[2] * &b[3] + &a[5] * &b[0] - &a[4] * &b[1] + &a[3] * &b[2]
}

/// Builds the line through two distinct points.
pub fn line_from_points(p: &ProjPoint, q: &ProjPoint) -> Result<PluckerLine> {
    let plucker = plucker_of(p.coords(), q.coords());
    if plucker.iter().all(|c| c.is_zero()) {
        return Err(Error::DegenerateSpan);
    }
    debug_assert!(
        (&plucker[0] * &plucker[5] - &plucker[1] * &plucker[4] + &plucker[2] * &plucker[3])
            .is_zero(),
        "plucker vector must satisfy the quadric relation"
    );
    let prim = primitive_int_row(&plucker);
    Ok(PluckerLine {
        p: p.clone(),
        q: q.clone(),
        plucker,
        prim_plucker: [
            prim[0].clone(),
            prim[1].clone(),
            prim[2].clone(),
            prim[3].clone(),
            prim[4].clone(),
            prim[5].clone(),
        ],
    })
}

impl PluckerLine {
    pub fn span(&self) -> (&ProjPoint, &ProjPoint) {
        (&self.p, &self.q)
    }

    pub fn plucker(&self) -> &[ExactScalar; 6] {
        &self.plucker
    }

    /// Two `PluckerLine` values describe the same line exactly when their
    /// primitive Plücker vectors coincide.
    pub fn same_line(&self, other: &PluckerLine) -> bool {
        self.prim_plucker == other.prim_plucker
    }

    /// Whether the point lies on this line (rank of the stacked span drops).
    pub fn contains(&self, x: &ProjPoint) -> bool {
        let m = DenseMatrix::from_rows(vec![
            self.p.coords().to_vec(),
            self.q.coords().to_vec(),
            x.coords().to_vec(),
        ]);
        rank(&m) <= 2
    }
}

impl std::fmt::Display for PluckerLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{} ~ {}]", self.p, self.q)
    }
}

/// Whether two distinct lines intersect. Identical lines are rejected with
/// `SameLine`; incidence of a line with itself is not a meaningful question.
pub fn lines_meet(a: &PluckerLine, b: &PluckerLine) -> Result<bool> {
    if a.same_line(b) {
        return Err(Error::SameLine);
    }
    Ok(omega_raw(&a.plucker, &b.plucker).is_zero())
}

// ---------------------------------------------------------------------------
// Small exact linear algebra helpers
// ---------------------------------------------------------------------------

/// Reduced row echelon form; returns the reduced rows and pivot columns.
#[allow(clippy::needless_range_loop)] // cross-row elimination reads row `rank` while writing row `r`
fn rref(mut rows: Vec<Vec<ExactScalar>>) -> (Vec<Vec<ExactScalar>>, Vec<usize>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pv = rows[rank][col].clone();
        for v in &mut rows[rank][col..ncols] {
            *v = v.clone() / &pv;
        }
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..ncols {
                    let v = rows[r][c].clone() - &f * &rows[rank][c];
                    rows[r][c] = v;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    (rows, pivots)
}

/// Basis of the right kernel of the row system (small exact computation).
pub(crate) fn kernel_basis(rows: Vec<Vec<ExactScalar>>, ncols: usize) -> Vec<Vec<ExactScalar>> {
    nullspace(rows, ncols)
}

fn nullspace(rows: Vec<Vec<ExactScalar>>, ncols: usize) -> Vec<Vec<ExactScalar>> {
    let (rr, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![ExactScalar::zero(); ncols];
        v[fc] = ExactScalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -rr[r][fc].clone();
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Arrangements
// ---------------------------------------------------------------------------

/// A finite set of pairwise distinct lines with its incidence matrix.
#[derive(Clone, Debug)]
pub struct LineArrangement {
    lines: Vec<PluckerLine>,
    incidence: Vec<Vec<bool>>,
}

impl LineArrangement {
    pub fn new(lines: Vec<PluckerLine>) -> Result<Self> {
        let k = lines.len();
        let mut incidence = vec![vec![false; k]; k];
        for i in 0..k {
            for j in i + 1..k {
                if lines[i].same_line(&lines[j]) {
                    return Err(Error::DuplicateLine);
                }
                let m = lines_meet(&lines[i], &lines[j])?;
                incidence[i][j] = m;
                incidence[j][i] = m;
            }
        }
        Ok(LineArrangement { lines, incidence })
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// The degree of the underlying curve: one per line.
    pub fn degree(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[PluckerLine] {
        &self.lines
    }

    pub fn incidence(&self) -> &Vec<Vec<bool>> {
        &self.incidence
    }

    pub fn meets(&self, i: usize, j: usize) -> bool {
        self.incidence[i][j]
    }

    /// Number of incident pairs (graph edges of the incidence matrix).
    pub fn incident_pairs(&self) -> usize {
        let k = self.len();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| self.incidence[i][j])
            .count()
    }

    /// Whether the union of the lines is a connected curve.
    pub fn is_connected(&self) -> bool {
        let k = self.len();
        if k <= 1 {
            return true;
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, meets) in self.incidence[i].iter().enumerate() {
                if *meets && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The intersection point of lines `i` and `j`, when they meet.
    pub fn intersection_point(&self, i: usize, j: usize) -> Option<ProjPoint> {
        if !self.incidence[i][j] {
            return None;
        }
        let (p1, q1) = self.lines[i].span();
        let (p2, q2) = self.lines[j].span();
        // Columns are coefficients (a, b, c, d) in a·P1 + b·Q1 = c·P2 + d·Q2.
        let rows: Vec<Vec<ExactScalar>> = (0..4)
            .map(|coord| {
                vec![
                    p1.coords()[coord].clone(),
                    q1.coords()[coord].clone(),
                    -p2.coords()[coord].clone(),
                    -q2.coords()[coord].clone(),
                ]
            })
            .collect();
        let basis = nullspace(rows, 4);
        let v = basis.first()?;
        let x: [ExactScalar; 4] =
            std::array::from_fn(|coord| &v[0] * &p1.coords()[coord] + &v[1] * &q1.coords()[coord]);
        ProjPoint::new(x).ok()
    }

    /// A point common to every line of the arrangement, if one exists.
    pub fn common_point(&self) -> Option<ProjPoint> {
        if self.lines.is_empty() {
            return None;
        }
        let rows = plane_equations(&self.lines);
        let basis = nullspace(rows, 4);
        let v = basis.first()?;
        ProjPoint::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]).ok()
    }

    /// Whether no three lines pass through one point (distinct lines assumed).
    pub fn is_nodal(&self) -> bool {
        let k = self.len();
        let mut points: Vec<([BigInt; 4], (usize, usize))> = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if !self.incidence[i][j] {
                    continue;
                }
                let Some(pt) = self.intersection_point(i, j) else {
                    continue;
                };
                let key = pt.primitive();
                for (other, (a, b)) in &points {
                    if *other == key && (*a == i || *b == i || *a == j || *b == j) {
                        return false;
                    }
                }
                points.push((key, (i, j)));
            }
        }
        true
    }

    /// Number of distinct pairwise intersection points.
    pub fn node_count(&self) -> usize {
        let k = self.len();
        let mut points: Vec<[BigInt; 4]> = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if self.incidence[i][j] {
                    if let Some(pt) = self.intersection_point(i, j) {
                        let key = pt.primitive();
                        if !points.contains(&key) {
                            points.push(key);
                        }
                    }
                }
            }
        }
        points.len()
    }

    /// The arrangement extended by one more line.
    pub fn extended(&self, line: &PluckerLine) -> Result<LineArrangement> {
        let mut lines = self.lines.clone();
        lines.push(line.clone());
        LineArrangement::new(lines)
    }
}

/// Two independent plane equations per line (planes containing the line),
/// stacked into rows over the four coordinate columns.
fn plane_equations(lines: &[PluckerLine]) -> Vec<Vec<ExactScalar>> {
    let mut rows = Vec::with_capacity(2 * lines.len());
    for line in lines {
        let (p, q) = line.span();
        let span_rows = vec![p.coords().to_vec(), q.coords().to_vec()];
        let planes = nullspace(span_rows, 4);
        debug_assert_eq!(planes.len(), 2);
        rows.extend(planes);
    }
    rows
}

/// How many members of the arrangement the probe line meets. The probe must
/// not itself belong to the arrangement.
pub fn intersection_count(line: &PluckerLine, arr: &LineArrangement) -> Result<usize> {
    let mut count = 0;
    for member in arr.lines() {
        if member.same_line(line) {
            return Err(Error::MemberLine);
        }
        if lines_meet(line, member)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether all lines lie in a common plane: the stacked spanning points of
/// the lines span at most a plane (rank of the 2k x 4 matrix at most 3).
/// Arrangements with fewer than two lines are trivially coplanar.
pub fn is_coplanar(arr: &LineArrangement) -> bool {
    if arr.len() <= 1 {
        return true;
    }
    let rows: Vec<Vec<ExactScalar>> = arr
        .lines()
        .iter()
        .flat_map(|l| {
            let (p, q) = l.span();
            [p.coords().to_vec(), q.coords().to_vec()]
        })
        .collect();
    rank(&DenseMatrix::from_rows(rows)) <= 3
}

/// Whether all lines pass through one common point: the stacked plane
/// equations of the lines have a nonzero common solution.
pub fn is_concurrent(arr: &LineArrangement) -> bool {
    if arr.len() <= 1 {
        return true;
    }
    let rows = plane_equations(arr.lines());
    rank(&DenseMatrix::from_rows(rows)) <= 3
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// The named configuration families, plus free-form custom arrangements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    /// k pairwise skew lines in general position.
    Generic,
    /// k distinct lines in a common plane, no three concurrent.
    Coplanar,
    /// k lines through a common point, no three coplanar.
    Concurrent,
    /// An explicit witness arrangement.
    Custom,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Generic => "generic",
            FamilyKind::Coplanar => "coplanar",
            FamilyKind::Concurrent => "concurrent",
            FamilyKind::Custom => "custom",
        }
    }
}

/// A configuration family: a kind, a line count, and (for custom families or
/// after realization) a witness arrangement.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    kind: FamilyKind,
    k: usize,
    witness: Option<LineArrangement>,
}

impl FamilySpec {
    pub fn generic(k: usize) -> Self {
        assert!(k >= 1, "a family needs at least one line");
        FamilySpec {
            kind: FamilyKind::Generic,
            k,
            witness: None,
        }
    }

    pub fn coplanar(k: usize) -> Self {
        assert!(k >= 1, "a family needs at least one line");
        FamilySpec {
            kind: FamilyKind::Coplanar,
            k,
            witness: None,
        }
    }

    pub fn concurrent(k: usize) -> Self {
        assert!(k >= 1, "a family needs at least one line");
        FamilySpec {
            kind: FamilyKind::Concurrent,
            k,
            witness: None,
        }
    }

    pub fn custom(witness: LineArrangement) -> Self {
        FamilySpec {
            kind: FamilyKind::Custom,
            k: witness.len(),
            witness: Some(witness),
        }
    }

    pub fn named(kind: FamilyKind, k: usize) -> Self {
        match kind {
            FamilyKind::Generic => Self::generic(k),
            FamilyKind::Coplanar => Self::coplanar(k),
            FamilyKind::Concurrent => Self::concurrent(k),
            FamilyKind::Custom => panic!("custom families require a witness"),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn witness(&self) -> Option<&LineArrangement> {
        self.witness.as_ref()
    }

    /// Produces a witness arrangement: the stored one for custom families,
    /// or a seeded pseudorandom generic member of a named family. The same
    /// (kind, k, seed) triple always yields the same arrangement.
    pub fn realize(&self, seed: Option<u64>) -> Result<LineArrangement> {
        match self.kind {
            FamilyKind::Custom => self.witness.clone().ok_or(Error::MissingWitness),
            kind => {
                let seed = seed.ok_or(Error::SeedRequired)?;
                witness::generate(kind, self.k, seed)
            }
        }
    }
}

/// Dimension of the configuration family inside the Grassmannian of lines.
///
/// Named families use closed forms; custom families fall back to the tangent
/// computation at their witness.
pub fn family_dim(spec: &FamilySpec) -> Result<i64> {
    let k = spec.k() as i64;
    match spec.kind() {
        FamilyKind::Generic => Ok(4 * k),
        FamilyKind::Coplanar | FamilyKind::Concurrent => Ok(if k == 1 { 4 } else { 2 * k + 3 }),
        FamilyKind::Custom => {
            let w = spec.witness().ok_or(Error::MissingWitness)?;
            Ok(tangent_family_dim(w))
        }
    }
}

/// Dimension of the incidence-constrained configuration space at a witness:
/// 4 chart coordinates per line minus the rank of the Jacobian of the active
/// incidence constraints. This is the tangent-space dimension, hence an upper
/// bound for the local dimension, with equality at smooth points.
pub fn tangent_family_dim(arr: &LineArrangement) -> i64 {
    let k = arr.len();
    let active: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| arr.meets(i, j))
        .collect();
    if active.is_empty() {
        return 4 * k as i64;
    }

    // Per line: two transverse directions (standard basis vectors at the
    // non-pivot columns of the span), each applied to both spanning points.
    let mut transverse: Vec<[usize; 2]> = Vec::with_capacity(k);
    for line in arr.lines() {
        let (p, q) = line.span();
        let (_, pivots) = rref(vec![p.coords().to_vec(), q.coords().to_vec()]);
        let free: Vec<usize> = (0..4).filter(|c| !pivots.contains(c)).collect();
        debug_assert_eq!(free.len(), 2);
        transverse.push([free[0], free[1]]);
    }

    let basis_vec = |idx: usize| -> [ExactScalar; 4] {
        std::array::from_fn(|c| {
            if c == idx {
                ExactScalar::one()
            } else {
                ExactScalar::zero()
            }
        })
    };

    let mut jac: Vec<Vec<ExactScalar>> = Vec::with_capacity(active.len());
    for &(i, j) in &active {
        let mut row = vec![ExactScalar::zero(); 4 * k];
        for (line_idx, other_idx) in [(i, j), (j, i)] {
            let (p, q) = arr.lines()[line_idx].span();
            let other = arr.lines()[other_idx].plucker();
            for (slot, &dir) in transverse[line_idx].iter().enumerate() {
                let u = basis_vec(dir);
                // Derivative along perturbing the first spanning point.
                let dp = plucker_of(&u, q.coords());
                row[4 * line_idx + slot] = omega_raw(&dp, other);
                // Derivative along perturbing the second spanning point.
                let dq = plucker_of(p.coords(), &u);
                row[4 * line_idx + 2 + slot] = omega_raw(&dq, other);
            }
        }
        jac.push(row);
    }
    let r = rank(&DenseMatrix::from_rows(jac));
    4 * k as i64 - r as i64
}
