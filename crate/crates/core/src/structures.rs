//! Finite braided sets, cycle sets, shelves and braided modules.
//!
//! Elements are indices `0..n`. A braiding is stored as two tables with
//! `sigma(a, b) = (left[a][b], right[a][b])`, i.e. `(ᵃb, aᵇ)`.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

pub type Table = Vec<Vec<usize>>;

pub(crate) fn check_table(t: &Table, rows: usize, cols: usize, range: usize) -> Result<()> {
    if t.len() != rows || t.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape(format!("expected a {rows}x{cols} table")));
    }
    for (i, r) in t.iter().enumerate() {
        for (j, &v) in r.iter().enumerate() {
            if v >= range {
                return Err(Error::Range(format!("entry [{i}][{j}] = {v} not below {range}")));
            }
        }
    }
    Ok(())
}

pub fn is_permutation(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len()];
    for &v in row {
        if v >= row.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub fn invert_permutation(row: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; row.len()];
    for (i, &v) in row.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

fn ybe_witness(left: &Table, right: &Table) -> Option<(usize, usize, usize)> {
    let n = left.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // (σ×Id)(Id×σ)(σ×Id)
                let (x1, y1) = (left[a][b], right[a][b]);
                let (y2, z2) = (left[y1][c], right[y1][c]);
                let (x3, y3) = (left[x1][y2], right[x1][y2]);
                // (Id×σ)(σ×Id)(Id×σ)
                let (q1, r1) = (left[b][c], right[b][c]);
                let (p2, q2) = (left[a][q1], right[a][q1]);
                let (q3, r3) = (left[q2][r1], right[q2][r1]);
                if (x3, y3, z2) != (p2, q3, r3) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// A finite braided set. Immutable once validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedSet {
    n: usize,
    left: Table,
    right: Table,
    // Sideways tables, present iff left non-degenerate:
    // lolli[b][a] = b⊸a (the x with xᵇ = a), dot[a][b] = a·b = ^{b⊸a}b.
    lolli: Option<Table>,
    dot: Option<Table>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub left_nondegenerate: bool,
    pub right_nondegenerate: bool,
    pub invertible: bool,
    pub involutive: bool,
    pub weakly_ri_compatible: bool,
    pub ri_compatible: bool,
    pub t_map: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShelfVariant {
    /// σ(a,b) = (b, a◁b)
    Primal,
    /// σ'(a,b) = (b◁a, a)
    Mirror,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidewaysReport {
    pub passed: bool,
    /// (identity number 1..=3, witness triple) of the first failure of each identity.
    pub failures: Vec<(usize, (usize, usize, usize))>,
}

impl BraidedSet {
    pub fn new(left: Table, right: Table) -> Result<Self> {
        let n = left.len();
        if n == 0 {
            return Err(Error::Shape("empty carrier".into()));
        }
        check_table(&left, n, n, n)?;
        check_table(&right, n, n, n)?;
        if let Some(w) = ybe_witness(&left, &right) {
            return Err(Error::YbeViolation(w));
        }
        Ok(Self::build(left, right))
    }

    /// Builds without the YBE check; tables must still be in range.
    pub fn new_unchecked(left: Table, right: Table) -> Result<Self> {
        let n = left.len();
        check_table(&left, n, n, n)?;
        check_table(&right, n, n, n)?;
        Ok(Self::build(left, right))
    }

    fn build(left: Table, right: Table) -> Self {
        let n = left.len();
        let mut lolli = Some(vec![vec![0; n]; n]);
        for b in 0..n {
            let col: Vec<usize> = (0..n).map(|x| right[x][b]).collect();
            if !is_permutation(&col) {
                lolli = None;
                break;
            }
            if let Some(l) = lolli.as_mut() {
                l[b] = invert_permutation(&col);
            }
        }
        let dot = lolli.as_ref().map(|l| {
            (0..n)
                .map(|a| (0..n).map(|b| left[l[b][a]][b]).collect())
                .collect()
        });
        BraidedSet { n, left, right, lolli, dot }
    }

    pub fn satisfies_ybe(&self) -> bool {
        ybe_witness(&self.left, &self.right).is_none()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn left_table(&self) -> &Table {
        &self.left
    }

    pub fn right_table(&self) -> &Table {
        &self.right
    }

    /// ᵃb
    #[inline]
    pub fn left(&self, a: usize, b: usize) -> usize {
        self.left[a][b]
    }

    /// aᵇ
    #[inline]
    pub fn right(&self, a: usize, b: usize) -> usize {
        self.right[a][b]
    }

    #[inline]
    pub fn sigma(&self, a: usize, b: usize) -> (usize, usize) {
        (self.left[a][b], self.right[a][b])
    }

    pub fn is_left_nondegenerate(&self) -> bool {
        self.lolli.is_some()
    }

    pub fn require_lnd(&self) -> Result<()> {
        if self.is_left_nondegenerate() {
            Ok(())
        } else {
            Err(Error::NotLeftNondegenerate)
        }
    }

    pub fn is_right_nondegenerate(&self) -> bool {
        self.left.iter().all(|r| is_permutation(r))
    }

    /// a·b. Panics unless left non-degenerate.
    #[inline]
    pub fn dot(&self, a: usize, b: usize) -> usize {
        self.dot.as_ref().expect("left non-degenerate braided set")[a][b]
    }

    /// b⊸a, the inverse right translation of a by b. Panics unless left non-degenerate.
    #[inline]
    pub fn lolli(&self, b: usize, a: usize) -> usize {
        self.lolli.as_ref().expect("left non-degenerate braided set")[b][a]
    }

    /// (a·b, b⊸a)
    pub fn sideways(&self, a: usize, b: usize) -> Result<(usize, usize)> {
        self.require_lnd()?;
        Ok((self.dot(a, b), self.lolli(b, a)))
    }

    /// Tables (left, right) of σ⁻¹ when σ is bijective on pairs.
    pub fn inverse_tables(&self) -> Option<(Table, Table)> {
        let n = self.n;
        let mut il = vec![vec![usize::MAX; n]; n];
        let mut ir = vec![vec![usize::MAX; n]; n];
        for a in 0..n {
            for b in 0..n {
                let (c, d) = self.sigma(a, b);
                if il[c][d] != usize::MAX {
                    return None;
                }
                il[c][d] = a;
                ir[c][d] = b;
            }
        }
        Some((il, ir))
    }

    pub fn inverse(&self) -> Option<BraidedSet> {
        self.inverse_tables().map(|(l, r)| Self::build(l, r))
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse_tables().is_some()
    }

    pub fn is_involutive(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                let (c, d) = self.sigma(a, b);
                self.sigma(c, d) == (a, b)
            })
        })
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                let (c, d) = self.sigma(a, b);
                self.sigma(c, d) == (c, d)
            })
        })
    }

    /// For each a, the values x with σ(x,a) = (x,a).
    fn t_candidates(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).filter(|&x| self.sigma(x, a) == (x, a)).collect())
            .collect()
    }

    /// The map t of weak RI-compatibility, if one exists (first valid value per element).
    pub fn t_map(&self) -> Option<Vec<usize>> {
        if self.is_left_nondegenerate() {
            let t: Vec<usize> = (0..self.n).map(|a| self.dot(a, a)).collect();
            return (0..self.n)
                .all(|a| t[a] == self.lolli(a, a))
                .then_some(t);
        }
        self.t_candidates()
            .into_iter()
            .map(|c| c.first().copied())
            .collect()
    }

    /// A bijective t, if one exists (bipartite matching over candidates).
    fn bijective_t(&self) -> Option<Vec<usize>> {
        let cand = self.t_candidates();
        let n = self.n;
        let mut owner: Vec<Option<usize>> = vec![None; n];
        fn augment(
            a: usize,
            cand: &[Vec<usize>],
            owner: &mut [Option<usize>],
            seen: &mut [bool],
        ) -> bool {
            for &x in &cand[a] {
                if seen[x] {
                    continue;
                }
                seen[x] = true;
                if owner[x].is_none() || augment(owner[x].unwrap(), cand, owner, seen) {
                    owner[x] = Some(a);
                    return true;
                }
            }
            false
        }
        for a in 0..n {
            let mut seen = vec![false; n];
            if !augment(a, &cand, &mut owner, &mut seen) {
                return None;
            }
        }
        let mut t = vec![0; n];
        for (x, o) in owner.iter().enumerate() {
            t[o.unwrap()] = x;
        }
        Some(t)
    }

    pub fn classify(&self) -> PropertyReport {
        let t_map = self.t_map();
        let weakly = t_map.is_some();
        let ri = if self.is_left_nondegenerate() {
            t_map.as_ref().is_some_and(|t| is_permutation(t))
        } else {
            weakly && self.bijective_t().is_some()
        };
        PropertyReport {
            left_nondegenerate: self.is_left_nondegenerate(),
            right_nondegenerate: self.is_right_nondegenerate(),
            invertible: self.is_invertible(),
            involutive: self.is_involutive(),
            weakly_ri_compatible: weakly,
            ri_compatible: ri,
            t_map,
        }
    }

    /// a◁b = (b·a)ᵇ
    pub fn associated_shelf(&self) -> Result<Shelf> {
        self.require_lnd()?;
        let n = self.n;
        let op = (0..n)
            .map(|a| (0..n).map(|b| self.right(self.dot(b, a), b)).collect())
            .collect();
        Shelf::new(op)
    }

    pub fn check_sideways_identities(&self) -> Result<SidewaysReport> {
        self.require_lnd()?;
        let n = self.n;
        let mut failures = Vec::new();
        let mut found = [false; 3];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let checks = [
                        self.dot(self.lolli(a, b), self.dot(a, c))
                            == self.dot(self.dot(b, a), self.dot(b, c)),
                        self.lolli(self.dot(a, b), self.lolli(a, c))
                            == self.lolli(self.lolli(b, a), self.lolli(b, c)),
                        self.dot(self.lolli(a, b), self.lolli(a, c))
                            == self.lolli(self.dot(b, a), self.dot(b, c)),
                    ];
                    for (k, ok) in checks.iter().enumerate() {
                        if !ok && !found[k] {
                            found[k] = true;
                            failures.push((k + 1, (a, b, c)));
                        }
                    }
                }
            }
        }
        Ok(SidewaysReport { passed: failures.is_empty(), failures })
    }

    /// σ(a,b) = ((b∗a)·b, b∗a)
    pub fn from_cycle_set(c: &CycleSet) -> BraidedSet {
        let n = c.size();
        let mut left = vec![vec![0; n]; n];
        let mut right = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let u = c.star(b, a);
                left[a][b] = c.op(u, b);
                right[a][b] = u;
            }
        }
        Self::build(left, right)
    }

    pub fn from_shelf(s: &Shelf, variant: ShelfVariant) -> BraidedSet {
        let n = s.size();
        let mut left = vec![vec![0; n]; n];
        let mut right = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let (l, r) = match variant {
                    ShelfVariant::Primal => (b, s.op(a, b)),
                    ShelfVariant::Mirror => (s.op(b, a), a),
                };
                left[a][b] = l;
                right[a][b] = r;
            }
        }
        Self::build(left, right)
    }

    /// σ⋆(a,b) = (e, a⋆b) for a monoid with unit e.
    pub fn from_group(mult: &Table, unit: usize) -> Result<BraidedSet> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::Shape("empty carrier".into()));
        }
        check_table(mult, n, n, n)?;
        if unit >= n {
            return Err(Error::Range(format!("unit {unit}")));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::NotAssociative((a, b, c)));
                    }
                }
            }
        }
        if (0..n).any(|a| mult[unit][a] != a || mult[a][unit] != a) {
            return Err(Error::NotUnit(unit));
        }
        let left = vec![vec![unit; n]; n];
        let right = mult.clone();
        BraidedSet::new(left, right)
    }

    /// The braided set on the 2n signed elements: `a⁺ = a`, `a⁻ = n + a`.
    pub fn double(&self) -> Result<BraidedSet> {
        let rep = self.classify();
        for (ok, name) in [
            (rep.left_nondegenerate, "left non-degenerate"),
            (rep.right_nondegenerate, "right non-degenerate"),
            (rep.invertible, "invertible"),
            (rep.ri_compatible, "RI-compatible"),
        ] {
            if !ok {
                return Err(Error::PreconditionFailed(format!("braided set is not {name}")));
            }
        }
        let n = self.n;
        let (il, ir) = self.inverse_tables().unwrap();
        // linv[a][b] = c with ᵃc = b
        let linv: Table = self.left.iter().map(|r| invert_permutation(r)).collect();
        let mut left = vec![vec![0; 2 * n]; 2 * n];
        let mut right = vec![vec![0; 2 * n]; 2 * n];
        for a in 0..n {
            for b in 0..n {
                // ++
                let (c, d) = self.sigma(a, b);
                left[a][b] = c;
                right[a][b] = d;
                // −−: σ(d,c) = (b,a)
                let (d, c) = (il[b][a], ir[b][a]);
                left[n + a][n + b] = n + c;
                right[n + a][n + b] = n + d;
                // +−: σ(d,b) = (c,a), output (c⁻, d⁺)
                let d = self.lolli(b, a);
                let c = self.left(d, b);
                left[a][n + b] = n + c;
                right[a][n + b] = d;
                // −+: σ(a,c) = (b,d), output (c⁺, d⁻)
                let c = linv[a][b];
                let d = self.right(a, c);
                left[n + a][b] = c;
                right[n + a][b] = n + d;
            }
        }
        BraidedSet::new(left, right)
    }

    /// Checks the YBE-compatibility of a right action table (m×n).
    pub fn right_module_witness(&self, action: &Table) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for (p, row) in action.iter().enumerate() {
            for a in 0..n {
                for b in 0..n {
                    let (c, d) = self.sigma(a, b);
                    if action[row[a]][b] != action[row[c]][d] {
                        return Some((p, a, b));
                    }
                }
            }
        }
        None
    }

    /// Checks a·(b·q) = ᵃb·(aᵇ·q) for a left action table (n×m).
    pub fn left_module_witness(&self, action: &Table) -> Option<(usize, usize, usize)> {
        let n = self.n;
        let m = action.first().map_or(0, |r| r.len());
        for a in 0..n {
            for b in 0..n {
                let (c, d) = self.sigma(a, b);
                for q in 0..m {
                    if action[a][action[b][q]] != action[c][action[d][q]] {
                        return Some((a, b, q));
                    }
                }
            }
        }
        None
    }
}

/// Toss map on signed tuples encoded as in [`BraidedSet::double`]: a⁻ ↦ t(a)⁻.
pub fn toss(tuple: &[usize], t: &[usize]) -> Vec<usize> {
    let n = t.len();
    tuple
        .iter()
        .map(|&x| if x < n { x } else { n + t[x - n] })
        .collect()
}

/// t̄ on the double: t̄(a⁺) = t(a)⁺, t̄(a⁻) = (t⁻¹(a))⁻.
pub fn double_t(t: &[usize]) -> Vec<usize> {
    let n = t.len();
    let ti = invert_permutation(t);
    (0..n).map(|a| t[a]).chain((0..n).map(|a| n + ti[a])).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedElement {
    pub index: usize,
    pub positive: bool,
}

impl SignedElement {
    pub fn encode(&self, n: usize) -> usize {
        if self.positive {
            self.index
        } else {
            n + self.index
        }
    }

    pub fn decode(x: usize, n: usize) -> Self {
        if x < n {
            SignedElement { index: x, positive: true }
        } else {
            SignedElement { index: x - n, positive: false }
        }
    }
}

/// A cycle set: rows of `dot` are permutations and (a·b)·(a·c) = (b·a)·(b·c).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleSet {
    dot: Table,
    star: Table,
}

pub(crate) fn cycle_witness(dot: &Table) -> Option<(usize, usize, usize)> {
    let n = dot.len();
    for a in 0..n {
        for b in 0..n {
            let (ab, ba) = (dot[a][b], dot[b][a]);
            for c in 0..n {
                if dot[ab][dot[a][c]] != dot[ba][dot[b][c]] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

impl CycleSet {
    pub fn new(dot: Table) -> Result<Self> {
        let n = dot.len();
        if n == 0 {
            return Err(Error::Shape("empty carrier".into()));
        }
        check_table(&dot, n, n, n)?;
        if let Some(r) = dot.iter().position(|r| !is_permutation(r)) {
            return Err(Error::RowNotPermutation(r));
        }
        if let Some(w) = cycle_witness(&dot) {
            return Err(Error::CycleViolation(w));
        }
        Ok(Self::new_unchecked(dot))
    }

    /// Rows must be permutations; the cycle property is not checked.
    pub fn new_unchecked(dot: Table) -> Self {
        let star = dot.iter().map(|r| invert_permutation(r)).collect();
        CycleSet { dot, star }
    }

    pub fn trivial(n: usize) -> Self {
        Self::new_unchecked(vec![(0..n).collect(); n])
    }

    /// x·y = θ(y)
    pub fn permutation(theta: &[usize]) -> Result<Self> {
        Self::new(vec![theta.to_vec(); theta.len()])
    }

    pub fn size(&self) -> usize {
        self.dot.len()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.dot[a][b]
    }

    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star[a][b]
    }

    pub fn table(&self) -> &Table {
        &self.dot
    }

    pub fn star_table(&self) -> &Table {
        &self.star
    }

    pub fn squaring(&self) -> Vec<usize> {
        (0..self.size()).map(|a| self.dot[a][a]).collect()
    }

    pub fn relabel(&self, perm: &[usize]) -> CycleSet {
        let n = self.size();
        let mut t = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                t[perm[a]][perm[b]] = perm[self.dot[a][b]];
            }
        }
        Self::new_unchecked(t)
    }
}

/// A shelf: (a◁b)◁c = (a◁c)◁(b◁c).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shelf {
    op: Table,
    pub is_rack: bool,
    pub is_spindle: bool,
}

impl Shelf {
    pub fn new(op: Table) -> Result<Self> {
        let n = op.len();
        if n == 0 {
            return Err(Error::Shape("empty carrier".into()));
        }
        check_table(&op, n, n, n)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if op[op[a][b]][c] != op[op[a][c]][op[b][c]] {
                        return Err(Error::SdViolation((a, b, c)));
                    }
                }
            }
        }
        let is_rack = (0..n).all(|b| is_permutation(&(0..n).map(|a| op[a][b]).collect::<Vec<_>>()));
        let is_spindle = (0..n).all(|a| op[a][a] == a);
        Ok(Shelf { op, is_rack, is_spindle })
    }

    pub fn trivial(n: usize) -> Self {
        Self::new((0..n).map(|a| vec![a; n]).collect()).unwrap()
    }

    /// Dihedral quandle a◁b = 2b − a mod n.
    pub fn dihedral(n: usize) -> Self {
        Self::new(
            (0..n)
                .map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect())
                .collect(),
        )
        .unwrap()
    }

    pub fn size(&self) -> usize {
        self.op.len()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a][b]
    }

    pub fn table(&self) -> &Table {
        &self.op
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.size()).all(|a| self.op[a].iter().all(|&v| v == a))
    }
}

/// A right braided module: action[p][a] = p·a, with (p·a)·b = (p·ᵃb)·aᵇ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    action: Table,
    // inverse[p][a] = p·a⁻¹, present iff solid
    inverse: Option<Table>,
}

impl RightModule {
    pub fn new(b: &BraidedSet, action: Table) -> Result<Self> {
        let m = action.len();
        if m == 0 {
            return Err(Error::Shape("empty module".into()));
        }
        check_table(&action, m, b.size(), m)?;
        if let Some(w) = b.right_module_witness(&action) {
            return Err(Error::ModuleViolation(w));
        }
        Ok(Self::build(action))
    }

    fn build(action: Table) -> Self {
        let m = action.len();
        let n = action[0].len();
        let mut inverse = Some(vec![vec![0; n]; m]);
        for a in 0..n {
            let col: Vec<usize> = (0..m).map(|p| action[p][a]).collect();
            if !is_permutation(&col) {
                inverse = None;
                break;
            }
            let inv = invert_permutation(&col);
            if let Some(t) = inverse.as_mut() {
                for p in 0..m {
                    t[p][a] = inv[p];
                }
            }
        }
        RightModule { action, inverse }
    }

    pub fn trivial(n: usize) -> Self {
        Self::build(vec![vec![0; n]])
    }

    /// M = X with p·a = pᵃ.
    pub fn adjoint(b: &BraidedSet) -> Self {
        Self::build(b.right_table().clone())
    }

    pub fn carrier(&self) -> usize {
        self.action.len()
    }

    pub fn is_solid(&self) -> bool {
        self.inverse.is_some()
    }

    #[inline]
    pub fn act(&self, p: usize, a: usize) -> usize {
        self.action[p][a]
    }

    /// p·a⁻¹. Panics unless solid.
    #[inline]
    pub fn act_inv(&self, p: usize, a: usize) -> usize {
        self.inverse.as_ref().expect("solid module")[p][a]
    }

    pub fn table(&self) -> &Table {
        &self.action
    }
}

/// A left braided module: action[a][q] = a·q, with a·(b·q) = ᵃb·(aᵇ·q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    action: Table,
}

impl LeftModule {
    pub fn new(b: &BraidedSet, action: Table) -> Result<Self> {
        let m = action.first().map_or(0, |r| r.len());
        if m == 0 {
            return Err(Error::Shape("empty module".into()));
        }
        check_table(&action, b.size(), m, m)?;
        if let Some(w) = b.left_module_witness(&action) {
            return Err(Error::ModuleViolation(w));
        }
        Ok(LeftModule { action })
    }

    pub fn trivial(n: usize) -> Self {
        LeftModule { action: vec![vec![0]; n] }
    }

    /// N = X with a·q = ᵃq.
    pub fn adjoint(b: &BraidedSet) -> Self {
        LeftModule { action: b.left_table().clone() }
    }

    /// N = X with the sideways product a·q; a module for every cycle-set braiding.
    pub fn sideways_dot(b: &BraidedSet) -> Result<Self> {
        b.require_lnd()?;
        let n = b.size();
        Self::new(b, (0..n).map(|a| (0..n).map(|q| b.dot(a, q)).collect()).collect())
    }

    pub fn carrier(&self) -> usize {
        self.action[0].len()
    }

    #[inline]
    pub fn act(&self, a: usize, q: usize) -> usize {
        self.action[a][q]
    }

    pub fn table(&self) -> &Table {
        &self.action
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flip(n: usize) -> BraidedSet {
        BraidedSet::new(
            (0..n).map(|_| (0..n).collect()).collect(),
            (0..n).map(|a| vec![a; n]).collect(),
        )
        .unwrap()
    }

    fn shift2() -> CycleSet {
        CycleSet::new(vec![vec![1, 0], vec![1, 0]]).unwrap()
    }

    #[test]
    fn validate_examples() {
        flip(2);
        // σ(a,b) = (b+1, a+1)
        let s = BraidedSet::new(vec![vec![1, 0], vec![1, 0]], vec![vec![1, 1], vec![0, 0]]).unwrap();
        assert!(s.is_involutive());
        // σ(a,b) = (b,b) satisfies the YBE: both sides send (a,b,c) to (c,c,c)
        assert!(BraidedSet::new(vec![vec![0, 1], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]).is_ok());
        // σ(a,b) = (0, a+1): (0,0,0) goes to (0,1,0) on one side and (0,0,0) on the other
        let bad = BraidedSet::new(vec![vec![0, 0], vec![0, 0]], vec![vec![1, 1], vec![0, 0]]);
        assert_eq!(bad, Err(Error::YbeViolation((0, 0, 0))));
        assert!(matches!(
            BraidedSet::new(vec![vec![0, 2], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn classify_examples() {
        let r = flip(3).classify();
        assert!(r.involutive && r.left_nondegenerate && r.right_nondegenerate && r.invertible);
        assert!(r.ri_compatible);
        assert_eq!(r.t_map, Some(vec![0, 1, 2]));

        let z2 = BraidedSet::from_group(&vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        let r = z2.classify();
        assert!(r.left_nondegenerate && !r.invertible && !r.involutive && r.weakly_ri_compatible);
        assert_eq!(r.t_map, Some(vec![0, 0]));
        assert!(!r.ri_compatible);
        assert!(z2.is_idempotent());

        let r3 = BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Primal);
        let r = r3.classify();
        assert!(r.invertible && r.left_nondegenerate && r.ri_compatible);
        assert_eq!(r.t_map, Some(vec![0, 1, 2]));
    }

    #[test]
    fn sideways_examples() {
        assert_eq!(flip(2).sideways(0, 1).unwrap(), (1, 0));
        let s = BraidedSet::from_cycle_set(&shift2());
        assert_eq!(s.sideways(0, 0).unwrap(), (1, 1));
        let r3 = BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Primal);
        assert_eq!(r3.sideways(0, 1).unwrap(), (1, 2));
        let z2 = BraidedSet::from_group(&vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let (d, l) = z2.sideways(a, b).unwrap();
                assert_eq!(z2.sigma(l, b), (d, a));
            }
        }
    }

    #[test]
    fn associated_shelf_examples() {
        let s = BraidedSet::from_cycle_set(&shift2()).associated_shelf().unwrap();
        assert!(s.is_trivial());
        let z2 = BraidedSet::from_group(&vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        let s = z2.associated_shelf().unwrap();
        assert_eq!(s.table(), &vec![vec![0, 1], vec![0, 1]]);
        let d3 = Shelf::dihedral(3);
        for v in [ShelfVariant::Primal, ShelfVariant::Mirror] {
            let b = BraidedSet::from_shelf(&d3, v);
            if b.is_left_nondegenerate() {
                assert_eq!(b.associated_shelf().unwrap(), d3);
            }
        }
    }

    #[test]
    fn cycle_set_braidings() {
        assert_eq!(BraidedSet::from_cycle_set(&CycleSet::trivial(2)), flip(2));
        let s = BraidedSet::from_cycle_set(&shift2());
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(s.sigma(a, b), ((b + 1) % 2, (a + 1) % 2));
            }
        }
        // θ = (0 1 2): σ(a,b) = (θ(θ⁻¹(b))... ) computed from the formula
        let theta = [1, 2, 0];
        let c = CycleSet::permutation(&theta).unwrap();
        let s = BraidedSet::from_cycle_set(&c);
        for a in 0..3 {
            for b in 0..3 {
                let ti = (a + 2) % 3;
                assert_eq!(s.sigma(a, b), (theta[b], ti));
            }
        }
        assert!(s.is_involutive());
    }

    #[test]
    fn cycle_set_validation() {
        let t = CycleSet::new(vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(t.star_table(), t.table());
        shift2();
        assert_eq!(
            CycleSet::new(vec![vec![0, 1], vec![1, 0]]),
            Err(Error::CycleViolation((0, 1, 0)))
        );
        assert_eq!(CycleSet::new(vec![vec![0, 0], vec![0, 1]]), Err(Error::RowNotPermutation(0)));
    }

    #[test]
    fn shelf_braidings() {
        assert_eq!(BraidedSet::from_shelf(&Shelf::trivial(3), ShelfVariant::Primal), flip(3));
        assert_eq!(BraidedSet::from_shelf(&Shelf::trivial(2), ShelfVariant::Mirror), flip(2));
        let r3 = BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Primal);
        assert_eq!(r3.sigma(0, 1), (1, 2));
        assert!(r3.is_right_nondegenerate());
    }

    #[test]
    fn group_braidings() {
        let z2 = BraidedSet::from_group(&vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        assert_eq!(z2.sigma(1, 1), (0, 0));
        let z1 = BraidedSet::from_group(&vec![vec![0]], 0).unwrap();
        assert_eq!(z1.sigma(0, 0), (0, 0));
        // a monoid but not a group: right translation by 1 is not bijective
        let m = BraidedSet::from_group(&vec![vec![0, 1], vec![1, 1]], 0).unwrap();
        assert!(!m.is_left_nondegenerate());
        assert_eq!(BraidedSet::from_group(&vec![vec![0, 1], vec![1, 1]], 1), Err(Error::NotUnit(1)));
        assert!(matches!(
            BraidedSet::from_group(&vec![vec![1, 0], vec![0, 0]], 0),
            Err(Error::NotAssociative(_)) | Err(Error::NotUnit(_))
        ));
    }

    #[test]
    fn double_examples() {
        let d = flip(1).double().unwrap();
        assert_eq!(d, flip(2));
        let d = flip(2).double().unwrap();
        assert_eq!(d, flip(4));
        let r3 = BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Primal);
        let d = r3.double().unwrap();
        assert_eq!(d.size(), 6);
        let rep = d.classify();
        assert!(rep.invertible && rep.left_nondegenerate && rep.right_nondegenerate && rep.ri_compatible);
        assert_eq!(rep.t_map.unwrap(), double_t(&[0, 1, 2]));
        let z2 = BraidedSet::from_group(&vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        assert!(matches!(z2.double(), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn toss_examples() {
        assert_eq!(toss(&[0, 1, 2], &[1, 2, 0]), vec![0, 1, 2]);
        assert_eq!(toss(&[1], &[0]), vec![1]);
        // (0⁻, 1⁺) with t = shift on Z/3
        assert_eq!(toss(&[3, 1], &[1, 2, 0]), vec![4, 1]);
    }

    #[test]
    fn sideways_identity_examples() {
        assert!(BraidedSet::from_cycle_set(&shift2()).check_sideways_identities().unwrap().passed);
        assert!(flip(3).check_sideways_identities().unwrap().passed);
        let bad = BraidedSet::new_unchecked(vec![vec![0, 1], vec![0, 1]], vec![vec![1, 0], vec![0, 1]])
            .unwrap();
        assert!(bad.is_left_nondegenerate());
        assert!(!bad.check_sideways_identities().unwrap().passed);
    }

    #[test]
    fn modules() {
        let r3 = BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Primal);
        let adj = RightModule::adjoint(&r3);
        assert!(r3.right_module_witness(adj.table()).is_none());
        assert!(adj.is_solid());
        assert!(r3.left_module_witness(LeftModule::adjoint(&r3).table()).is_none());
        assert!(RightModule::new(&r3, vec![vec![0; 3]]).is_ok());
        let cs = BraidedSet::from_cycle_set(&shift2());
        assert!(LeftModule::sideways_dot(&cs).is_ok());
    }
}
