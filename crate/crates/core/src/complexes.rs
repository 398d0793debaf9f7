//! Pre-cubical boundary families on M × X^k × N, their degeneracies, the
//! induced integral chain complexes, the η-projector splitting and the guitar
//! conjugation between the braided and birack families.

use crate::guitar::{chi_with, guitar, guitar_inverse};
use crate::homology::{homology_at, invariant_factors, rank, HomologyResult, IntMatrix};
use crate::structures::{BraidedSet, CycleSet, LeftModule, RightModule, Shelf};
use crate::{tuples, CheckReport, Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A basis element (m, x_1, …, x_k, q) of M × X^k × N.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub m: usize,
    pub xs: Vec<usize>,
    pub q: usize,
}

impl Cell {
    pub fn new(m: usize, xs: Vec<usize>, q: usize) -> Self {
        Cell { m, xs, q }
    }

    pub fn plain(xs: Vec<usize>) -> Self {
        Cell { m: 0, xs, q: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    /// d⁺ = d^{plus,+}, d⁻ = d^{minus,−}; the default is (Left, Right).
    Braided { plus: Side, minus: Side },
    /// d⁺_i = d'_i, d⁻_i = d_i.
    Birack,
    /// d⁺_i = d'_i, d⁻_i = d*_i (· and ⊸ swapped).
    BirackStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Degeneracies {
    None,
    /// s_i(m,ȳ,n) = (m·t(χ_i(ȳ))⁻¹, …, y_i, y_i, …, n)
    Coefficient,
    /// s_i doubles position i (trivial coefficients).
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaBeta {
    pub alpha: i64,
    pub beta: i64,
}

impl AlphaBeta {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        AlphaBeta { alpha, beta }
    }

    /// The default (1, −1).
    pub const STANDARD: AlphaBeta = AlphaBeta::new(1, -1);
}

/// The (α, β) pairs exercised by the property suites.
pub const TEST_PAIRS: [AlphaBeta; 4] =
    [AlphaBeta::new(1, -1), AlphaBeta::new(1, 1), AlphaBeta::new(0, 1), AlphaBeta::new(2, 3)];

/// A basis-level boundary family on C_k = M × X^k × N.
#[derive(Clone, Debug)]
pub struct BoundaryModel {
    b: BraidedSet,
    inv: Option<BraidedSet>,
    shelf: Option<Shelf>,
    t: Option<Vec<usize>>,
    m: RightModule,
    n: LeftModule,
    kind: FamilyKind,
    degen: Degeneracies,
}

impl BoundaryModel {
    pub fn braided(
        b: &BraidedSet,
        m: &RightModule,
        n: &LeftModule,
        plus: Side,
        minus: Side,
    ) -> Result<Self> {
        check_modules(b, m, n)?;
        let inv = b.inverse();
        if (plus == Side::Right || minus == Side::Left) && inv.is_none() {
            return Err(Error::NotInvertible);
        }
        Ok(BoundaryModel {
            b: b.clone(),
            inv,
            shelf: None,
            t: None,
            m: m.clone(),
            n: n.clone(),
            kind: FamilyKind::Braided { plus, minus },
            degen: Degeneracies::None,
        })
    }

    pub fn birack(b: &BraidedSet, m: &RightModule, n: &LeftModule) -> Result<Self> {
        check_modules(b, m, n)?;
        let shelf = b.associated_shelf()?;
        Ok(BoundaryModel {
            b: b.clone(),
            inv: None,
            shelf: Some(shelf),
            t: None,
            m: m.clone(),
            n: n.clone(),
            kind: FamilyKind::Birack,
            degen: Degeneracies::None,
        })
    }

    /// The star family, with trivial coefficients.
    pub fn birack_star(b: &BraidedSet) -> Result<Self> {
        let mut model = Self::birack(b, &RightModule::trivial(b.size()), &LeftModule::trivial(b.size()))?;
        model.kind = FamilyKind::BirackStar;
        Ok(model)
    }

    /// Adds the degeneracies s_i with the t(χ_i)⁻¹ correction on M.
    pub fn with_coefficient_degeneracies(mut self) -> Result<Self> {
        if self.kind != FamilyKind::Birack {
            return Err(Error::PreconditionFailed("coefficient degeneracies need the birack family".into()));
        }
        let t = self
            .b
            .t_map()
            .ok_or_else(|| Error::PreconditionFailed("braided set is not weakly RI-compatible".into()))?;
        if !self.m.is_solid() {
            return Err(Error::PreconditionFailed("right module is not solid".into()));
        }
        self.t = Some(t);
        self.degen = Degeneracies::Coefficient;
        Ok(self)
    }

    /// Adds the diagonal doublings; needs a·a = a⊸a and trivial coefficients.
    pub fn with_plain_degeneracies(mut self) -> Result<Self> {
        if matches!(self.kind, FamilyKind::Braided { .. }) {
            return Err(Error::PreconditionFailed("plain degeneracies need a birack family".into()));
        }
        if self.m.carrier() != 1 || self.n.carrier() != 1 {
            return Err(Error::PreconditionFailed("plain degeneracies need trivial coefficients".into()));
        }
        let b = &self.b;
        if let Some(a) = (0..b.size()).find(|&a| b.dot(a, a) != b.lolli(a, a)) {
            return Err(Error::PreconditionFailed(format!("a·a != a⊸a at a = {a}")));
        }
        self.degen = Degeneracies::Plain;
        Ok(self)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn degeneracies(&self) -> Degeneracies {
        self.degen
    }

    pub fn braided_set(&self) -> &BraidedSet {
        &self.b
    }

    pub fn dim(&self, k: usize) -> usize {
        self.m.carrier() * self.b.size().pow(k as u32) * self.n.carrier()
    }

    /// Lexicographic index of a cell over (m, x_1, …, x_k, q).
    pub fn index(&self, c: &Cell) -> usize {
        let n = self.b.size();
        let x = c.xs.iter().fold(c.m, |acc, &v| acc * n + v);
        x * self.n.carrier() + c.q
    }

    pub fn cell(&self, k: usize, mut idx: usize) -> Cell {
        let n = self.b.size();
        let nq = self.n.carrier();
        let q = idx % nq;
        idx /= nq;
        let mut xs = vec![0; k];
        for j in (0..k).rev() {
            xs[j] = idx % n;
            idx /= n;
        }
        Cell { m: idx, xs, q }
    }

    pub fn cells(&self, k: usize) -> impl Iterator<Item = Cell> + '_ {
        (0..self.dim(k)).map(move |i| self.cell(k, i))
    }

    /// Face d^ε_i on a cell with k ≥ i entries; i is 1-based.
    pub fn face(&self, eps: Sign, i: usize, c: &Cell) -> Cell {
        let k = c.xs.len();
        assert!(i >= 1 && i <= k, "face index out of range");
        match (self.kind, eps) {
            (FamilyKind::Braided { plus, .. }, Sign::Plus) => match plus {
                Side::Left => self.left_face(&self.b, i, c),
                Side::Right => self.right_face(self.inv.as_ref().unwrap(), i, c),
            },
            (FamilyKind::Braided { minus, .. }, Sign::Minus) => match minus {
                Side::Left => self.left_face(self.inv.as_ref().unwrap(), i, c),
                Side::Right => self.right_face(&self.b, i, c),
            },
            (_, Sign::Plus) => {
                let chi = chi_with(&self.b, self.shelf.as_ref().unwrap(), i, &c.xs).unwrap();
                let mut xs = c.xs.clone();
                xs.remove(i - 1);
                Cell { m: self.m.act(c.m, chi), xs, q: c.q }
            }
            (kind, Sign::Minus) => {
                let b = &self.b;
                let y = c.xs[i - 1];
                let star = kind == FamilyKind::BirackStar;
                let before = |v| if star { b.dot(y, v) } else { b.lolli(y, v) };
                let after = |v| if star { b.lolli(y, v) } else { b.dot(y, v) };
                let mut xs = Vec::with_capacity(k - 1);
                xs.extend(c.xs[..i - 1].iter().map(|&v| before(v)));
                xs.extend(c.xs[i..].iter().map(|&v| after(v)));
                Cell { m: c.m, xs, q: self.n.act(y, c.q) }
            }
        }
    }

    /// ρ_0 ∘ σ_1 ∘ ⋯ ∘ σ_{i−1} with σ taken from `s`.
    fn left_face(&self, s: &BraidedSet, i: usize, c: &Cell) -> Cell {
        let mut xs = c.xs.clone();
        for j in (1..i).rev() {
            let (l, r) = s.sigma(xs[j - 1], xs[j]);
            xs[j - 1] = l;
            xs[j] = r;
        }
        let head = xs.remove(0);
        Cell { m: self.m.act(c.m, head), xs, q: c.q }
    }

    /// λ_k ∘ σ_{k−1} ∘ ⋯ ∘ σ_i with σ taken from `s`.
    fn right_face(&self, s: &BraidedSet, i: usize, c: &Cell) -> Cell {
        let mut xs = c.xs.clone();
        let k = xs.len();
        for j in i..k {
            let (l, r) = s.sigma(xs[j - 1], xs[j]);
            xs[j - 1] = l;
            xs[j] = r;
        }
        let last = xs.pop().unwrap();
        Cell { m: c.m, xs, q: self.n.act(last, c.q) }
    }

    /// Degeneracy s_i on a cell with k ≥ i entries, if the model has degeneracies.
    pub fn degeneracy(&self, i: usize, c: &Cell) -> Option<Cell> {
        let k = c.xs.len();
        assert!(i >= 1 && i <= k, "degeneracy index out of range");
        let mut xs = c.xs.clone();
        xs.insert(i, c.xs[i - 1]);
        match self.degen {
            Degeneracies::None => None,
            Degeneracies::Plain => Some(Cell { m: c.m, xs, q: c.q }),
            Degeneracies::Coefficient => {
                let chi = chi_with(&self.b, self.shelf.as_ref().unwrap(), i, &c.xs).unwrap();
                let t = self.t.as_ref().unwrap()[chi];
                Some(Cell { m: self.m.act_inv(c.m, t), xs, q: c.q })
            }
        }
    }

    /// ∂_k = α Σ (−1)^{i−1} d⁺_i + β Σ (−1)^{i−1} d⁻_i as a dim_{k−1} × dim_k matrix.
    pub fn differential_matrix(&self, k: usize, ab: AlphaBeta) -> IntMatrix {
        let cols = self.dim(k);
        let rows = if k == 0 { 0 } else { self.dim(k - 1) };
        let entries: Vec<Vec<(usize, i64)>> = (0..cols)
            .into_par_iter()
            .map(|j| {
                let mut out = Vec::with_capacity(2 * k);
                if k == 0 {
                    return out;
                }
                let c = self.cell(k, j);
                for i in 1..=k {
                    let sign = if i % 2 == 1 { 1 } else { -1 };
                    if ab.alpha != 0 {
                        out.push((self.index(&self.face(Sign::Plus, i, &c)), sign * ab.alpha));
                    }
                    if ab.beta != 0 {
                        out.push((self.index(&self.face(Sign::Minus, i, &c)), sign * ab.beta));
                    }
                }
                out
            })
            .collect();
        let mut m = IntMatrix::zeros(rows, cols);
        for (j, col) in entries.into_iter().enumerate() {
            for (i, v) in col {
                m.add_to(i, j, v);
            }
        }
        m
    }

    /// Matrix of a basis map C_from → C_to given by `f`.
    fn basis_map_matrix(&self, from: usize, to: usize, f: impl Fn(&Cell) -> Cell) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.dim(to), self.dim(from));
        for (j, c) in self.cells(from).enumerate() {
            m.add_to(self.index(&f(&c)), j, 1);
        }
        m
    }

    /// Matrix of s_i: C_{k−1} → C_k.
    pub fn degeneracy_matrix(&self, k: usize, i: usize) -> Result<IntMatrix> {
        if self.degen == Degeneracies::None {
            return Err(Error::NoDegeneracies);
        }
        Ok(self.basis_map_matrix(k - 1, k, |c| self.degeneracy(i, c).unwrap()))
    }

    pub fn face_matrix(&self, k: usize, eps: Sign, i: usize) -> IntMatrix {
        self.basis_map_matrix(k, k - 1, |c| self.face(eps, i, c))
    }

    /// η_k = (Id − s_1 d⁺_2)(Id − s_2 d⁺_3)⋯(Id − s_{k−1} d⁺_k).
    pub fn eta_projector(&self, k: usize) -> Result<IntMatrix> {
        if self.degen == Degeneracies::None {
            return Err(Error::NoDegeneracies);
        }
        let dim = self.dim(k);
        let mut eta = IntMatrix::identity(dim);
        for i in 1..k {
            // factor (Id − s_i d⁺_{i+1}) as an explicit matrix
            let mut f = IntMatrix::identity(dim);
            for (j, c) in self.cells(k).enumerate() {
                let img = self.degeneracy(i, &self.face(Sign::Plus, i + 1, &c)).unwrap();
                f.add_to(self.index(&img), j, -1);
            }
            eta = eta.mul(&f);
        }
        Ok(eta)
    }

    /// Basis indices of C_k lying in some Im s_i.
    pub fn degenerate_indices(&self, k: usize) -> Result<Vec<usize>> {
        if self.degen == Degeneracies::None {
            return Err(Error::NoDegeneracies);
        }
        let mut hit = vec![false; self.dim(k)];
        if k >= 2 {
            for c in self.cells(k - 1) {
                for i in 1..k {
                    hit[self.index(&self.degeneracy(i, &c).unwrap())] = true;
                }
            }
        }
        Ok((0..hit.len()).filter(|&i| hit[i]).collect())
    }

    pub fn chain_complex(&self, max_degree: usize, ab: AlphaBeta) -> ChainComplex {
        let dims = (0..=max_degree).map(|k| self.dim(k)).collect();
        let diffs = (0..=max_degree).map(|k| self.differential_matrix(k, ab)).collect();
        ChainComplex { dims, diffs }
    }
}

fn check_modules(b: &BraidedSet, m: &RightModule, n: &LeftModule) -> Result<()> {
    if m.table()[0].len() != b.size() || n.table().len() != b.size() {
        return Err(Error::SizeMismatch("module tables do not match the braided set".into()));
    }
    if let Some(w) = b.right_module_witness(m.table()) {
        return Err(Error::ModuleViolation(w));
    }
    if let Some(w) = b.left_module_witness(n.table()) {
        return Err(Error::ModuleViolation(w));
    }
    Ok(())
}

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

/// d^ε_i d^ζ_j = d^ζ_{j−1} d^ε_i for i < j, on all cells of degree ≤ max_k.
pub fn check_precubical(model: &BoundaryModel, max_k: usize) -> CheckReport {
    let mut rep = CheckReport::new();
    for k in 2..=max_k {
        for c in model.cells(k) {
            for j in 2..=k {
                for i in 1..j {
                    for e in SIGNS {
                        for z in SIGNS {
                            let lhs = model.face(e, i, &model.face(z, j, &c));
                            let rhs = model.face(z, j - 1, &model.face(e, i, &c));
                            rep.record(lhs == rhs, || {
                                format!("d{e:?}_{i} d{z:?}_{j} on {c:?}")
                            });
                        }
                    }
                }
            }
        }
    }
    rep
}

/// Semi-strong skew cubical relations, on s_j: C_k → C_{k+1} for k ≤ max_k − 1.
pub fn check_semi_strong(model: &BoundaryModel, max_k: usize) -> Result<CheckReport> {
    if model.degen == Degeneracies::None {
        return Err(Error::NoDegeneracies);
    }
    let s = |i, c: &Cell| model.degeneracy(i, c).unwrap();
    let d = |e, i, c: &Cell| model.face(e, i, c);
    let mut rep = CheckReport::new();
    for k in 1..max_k {
        for c in model.cells(k) {
            for j in 1..=k {
                let sc = s(j, &c);
                for e in SIGNS {
                    for i in 1..=k + 1 {
                        if i < j {
                            rep.record(d(e, i, &sc) == s(j - 1, &d(e, i, &c)), || {
                                format!("d{e:?}_{i} s_{j} = s_{} d_{i} on {c:?}", j - 1)
                            });
                        } else if i > j + 1 {
                            rep.record(d(e, i, &sc) == s(j, &d(e, i - 1, &c)), || {
                                format!("d{e:?}_{i} s_{j} = s_{j} d_{} on {c:?}", i - 1)
                            });
                        }
                    }
                    rep.record(d(e, j, &sc) == d(e, j + 1, &sc), || {
                        format!("d{e:?}_{j} s_{j} = d_{} s_{j} on {c:?}", j + 1)
                    });
                }
                rep.record(d(Sign::Plus, j, &sc) == c, || format!("d+_{j} s_{j} = Id on {c:?}"));
                for i in 1..=j {
                    let lhs = s(i, &s(j, &c));
                    let rhs = s(j + 1, &s(i, &c));
                    rep.record(lhs == rhs, || format!("s_{i} s_{j} = s_{} s_{i} on {c:?}", j + 1));
                }
            }
        }
    }
    Ok(rep)
}

/// The classical cubical conditions d^ε_i s_i = Id and d^ε_{i+1} s_i = s_i d^ε_i.
pub fn check_classical_cubical(model: &BoundaryModel, max_k: usize) -> Result<CheckReport> {
    if model.degen == Degeneracies::None {
        return Err(Error::NoDegeneracies);
    }
    let mut rep = CheckReport::new();
    for k in 1..max_k {
        for c in model.cells(k) {
            for i in 1..=k {
                let sc = model.degeneracy(i, &c).unwrap();
                for e in SIGNS {
                    rep.record(model.face(e, i, &sc) == c, || format!("d{e:?}_{i} s_{i} = Id on {c:?}"));
                    if i < k {
                        let rhs = model.degeneracy(i, &model.face(e, i, &c)).unwrap();
                        rep.record(model.face(e, i + 1, &sc) == rhs, || {
                            format!("d{e:?}_{} s_{i} = s_{i} d_{i} on {c:?}", i + 1)
                        });
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// J ∘ d^{r,−}_i = d_i ∘ J and J ∘ d^{l,+}_i = d'_i ∘ J with J = Id × J × Id.
pub fn conjugate_by_guitar(
    b: &BraidedSet,
    m: &RightModule,
    n: &LeftModule,
    max_k: usize,
) -> Result<CheckReport> {
    let br = BoundaryModel::braided(b, m, n, Side::Left, Side::Right)?;
    let bi = BoundaryModel::birack(b, m, n)?;
    let j = |c: &Cell| Cell { m: c.m, xs: guitar(b, &c.xs), q: c.q };
    let mut rep = CheckReport::new();
    for k in 1..=max_k {
        for c in br.cells(k) {
            let jc = j(&c);
            for i in 1..=k {
                for e in SIGNS {
                    let lhs = j(&br.face(e, i, &c));
                    let rhs = bi.face(e, i, &jc);
                    rep.record(lhs == rhs, || format!("J d{e:?}_{i} != d{e:?}_{i} J on {c:?}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Applies J⁻¹ to the X-part of a cell.
pub fn guitar_inverse_cell(b: &BraidedSet, c: &Cell) -> Result<Cell> {
    Ok(Cell { m: c.m, xs: guitar_inverse(b, &c.xs)?, q: c.q })
}

/// An integral chain complex: `diffs[k]` is ∂_k: C_k → C_{k−1}, of shape dim_{k−1} × dim_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    diffs: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, diffs: Vec<IntMatrix>) -> Result<Self> {
        if dims.len() != diffs.len() {
            return Err(Error::Shape("one differential per degree".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            let rows = if k == 0 { 0 } else { dims[k - 1] };
            if d.rows() != rows || d.cols() != dims[k] {
                return Err(Error::Shape(format!("differential {k} has the wrong shape")));
            }
        }
        Ok(ChainComplex { dims, diffs })
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims[k]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, k: usize) -> &IntMatrix {
        &self.diffs[k]
    }

    /// ∂_{k−1} ∂_k = 0 for all k.
    pub fn is_complex(&self) -> bool {
        (2..self.diffs.len()).all(|k| self.diffs[k - 1].mul(&self.diffs[k]).is_zero())
    }

    /// The subcomplex or quotient spanned by a subset of basis indices per degree.
    pub fn restrict(&self, keep: &[Vec<usize>]) -> ChainComplex {
        let dims: Vec<usize> = keep.iter().map(|k| k.len()).collect();
        let diffs = (0..self.dims.len())
            .map(|k| {
                if k == 0 {
                    IntMatrix::zeros(0, dims[0])
                } else {
                    self.diffs[k].select(&keep[k - 1], &keep[k])
                }
            })
            .collect();
        ChainComplex { dims, diffs }
    }
}

/// C_k = Z·X^k with ∂_k(x̄) = Σ_{i<k} (−1)^{i−1} [(x̂_i) − (x_i·x_1, …, x̂_i, …, x_i·x_k)] and ∂_1 = 0.
pub fn cycle_set_complex(c: &CycleSet, max_degree: usize) -> ChainComplex {
    sideways_complex(c.size(), max_degree, |y, v, _| c.op(y, v))
}

/// The LND cochain-level complex: before position i entries become x_i⊸x_j,
/// after it x_i·x_j (swapped in the star version).
pub fn lnd_complex(b: &BraidedSet, max_degree: usize, star: bool) -> Result<ChainComplex> {
    b.require_lnd()?;
    Ok(sideways_complex(b.size(), max_degree, |y, v, before| {
        if before != star {
            b.lolli(y, v)
        } else {
            b.dot(y, v)
        }
    }))
}

fn sideways_complex(
    n: usize,
    max_degree: usize,
    act: impl Fn(usize, usize, bool) -> usize + Sync,
) -> ChainComplex {
    let dims: Vec<usize> = (0..=max_degree).map(|k| n.pow(k as u32)).collect();
    let index = |xs: &[usize]| xs.iter().fold(0, |acc, &v| acc * n + v);
    let mut diffs = vec![IntMatrix::zeros(0, 1)];
    for k in 1..=max_degree {
        let mut m = IntMatrix::zeros(dims[k - 1], dims[k]);
        if k >= 2 {
            for (j, xs) in tuples(n, k).into_iter().enumerate() {
                for i in 1..k {
                    let sign = if i % 2 == 1 { 1 } else { -1 };
                    let y = xs[i - 1];
                    let mut drop = xs.clone();
                    drop.remove(i - 1);
                    let moved: Vec<usize> = xs
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p != i - 1)
                        .map(|(p, &v)| act(y, v, p < i - 1))
                        .collect();
                    m.add_to(index(&drop), j, sign);
                    m.add_to(index(&moved), j, -sign);
                }
            }
        }
        diffs.push(m);
    }
    ChainComplex { dims, diffs }
}

/// Degenerate/normalized splitting certificate in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCertificate {
    pub degree: usize,
    pub dim: usize,
    /// Basis indices spanning C^D = Σ Im s_i.
    pub degenerate: Vec<usize>,
    pub normalized_rank: usize,
    pub eta_kills_degenerate: bool,
    pub complement_in_degenerate: bool,
    pub rank_additive: bool,
    /// (α, β, both summands ∂-invariant)
    pub invariant: Vec<(i64, i64, bool)>,
}

impl SplitCertificate {
    pub fn passed(&self) -> bool {
        self.eta_kills_degenerate
            && self.complement_in_degenerate
            && self.rank_additive
            && self.invariant.iter().all(|x| x.2)
    }
}

/// Certifies C_k = C^D_k ⊕ Im η_k and the ∂-invariance of both summands.
pub fn split(model: &BoundaryModel, k: usize, pairs: &[AlphaBeta]) -> Result<SplitCertificate> {
    let eta = model.eta_projector(k)?;
    let dim = model.dim(k);
    let degenerate = model.degenerate_indices(k)?;
    let mut in_d = vec![false; dim];
    for &d in &degenerate {
        in_d[d] = true;
    }
    let eta_kills_degenerate = degenerate
        .iter()
        .all(|&d| (0..dim).all(|i| eta.get(i, d).is_zero()));
    // rows of Id − η outside C^D vanish
    let complement_in_degenerate = (0..dim).filter(|&i| !in_d[i]).all(|i| {
        (0..dim).all(|j| {
            let id = if i == j { BigInt::from(1) } else { BigInt::zero() };
            &id - eta.get(i, j) == BigInt::zero()
        })
    });
    let normalized_rank = rank(&eta);
    let rank_additive = normalized_rank + degenerate.len() == dim;
    let mut invariant = Vec::new();
    if k >= 1 {
        let eta_prev = model.eta_projector(k - 1)?;
        let deg_prev = model.degenerate_indices(k - 1)?;
        let mut in_prev = vec![false; model.dim(k - 1)];
        for &d in &deg_prev {
            in_prev[d] = true;
        }
        let comp_prev = {
            let mut m = IntMatrix::identity(model.dim(k - 1));
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let v = m.get(i, j) - eta_prev.get(i, j);
                    m.set(i, j, v);
                }
            }
            m
        };
        for ab in pairs {
            let d = model.differential_matrix(k, *ab);
            let keeps_d = degenerate
                .iter()
                .all(|&j| (0..d.rows()).all(|i| in_prev[i] || d.get(i, j).is_zero()));
            let keeps_n = comp_prev.mul(&d).mul(&eta).is_zero();
            invariant.push((ab.alpha, ab.beta, keeps_d && keeps_n));
        }
    }
    let cert = SplitCertificate {
        degree: k,
        dim,
        degenerate,
        normalized_rank,
        eta_kills_degenerate,
        complement_in_degenerate,
        rank_additive,
        invariant,
    };
    if !cert.eta_kills_degenerate || !cert.complement_in_degenerate || !cert.rank_additive {
        return Err(Error::SplittingFailure(format!("degree {k}: {cert:?}")));
    }
    Ok(cert)
}

/// Homology of the full complex, the degenerate subcomplex and the normalized
/// quotient, degree by degree, for one (α, β).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitHomology {
    pub full: Vec<HomologyResult>,
    pub degenerate: Vec<HomologyResult>,
    pub normalized: Vec<HomologyResult>,
}

impl SplitHomology {
    /// Betti numbers add and the torsion of the full complex is the direct sum of the parts.
    pub fn additive(&self) -> bool {
        self.full.iter().zip(&self.degenerate).zip(&self.normalized).all(|((f, d), n)| {
            let mut parts = d.torsion.clone();
            parts.extend(&n.torsion);
            f.betti == d.betti + n.betti && invariant_factors(&f.torsion) == invariant_factors(&parts)
        })
    }
}

pub fn split_homology(model: &BoundaryModel, max_degree: usize, ab: AlphaBeta) -> Result<SplitHomology> {
    let cx = model.chain_complex(max_degree, ab);
    let deg: Vec<Vec<usize>> = (0..=max_degree)
        .map(|k| model.degenerate_indices(k))
        .collect::<Result<_>>()?;
    let norm: Vec<Vec<usize>> = deg
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let mut in_d = vec![false; model.dim(k)];
            for &i in d {
                in_d[i] = true;
            }
            (0..model.dim(k)).filter(|&i| !in_d[i]).collect()
        })
        .collect();
    let dc = cx.restrict(&deg);
    let nc = cx.restrict(&norm);
    let hs = |c: &ChainComplex| (0..max_degree).map(|k| homology_at(c, k)).collect::<Result<Vec<_>>>();
    Ok(SplitHomology { full: hs(&cx)?, degenerate: hs(&dc)?, normalized: hs(&nc)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::ShelfVariant;

    fn flip(n: usize) -> BraidedSet {
        BraidedSet::from_cycle_set(&CycleSet::trivial(n))
    }

    fn r3() -> BraidedSet {
        BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Primal)
    }

    fn shift2() -> CycleSet {
        CycleSet::new(vec![vec![1, 0], vec![1, 0]]).unwrap()
    }

    fn z2() -> BraidedSet {
        BraidedSet::from_group(&vec![vec![0, 1], vec![1, 0]], 0).unwrap()
    }

    fn trivial_model(b: &BraidedSet, plus: Side, minus: Side) -> BoundaryModel {
        let n = b.size();
        BoundaryModel::braided(b, &RightModule::trivial(n), &LeftModule::trivial(n), plus, minus).unwrap()
    }

    #[test]
    fn braided_flip_faces() {
        let m = trivial_model(&flip(2), Side::Left, Side::Right);
        let c = Cell::plain(vec![0, 1]);
        assert_eq!(m.face(Sign::Plus, 1, &c).xs, vec![1]);
        assert_eq!(m.face(Sign::Plus, 2, &c).xs, vec![0]);
    }

    #[test]
    fn group_bar_faces() {
        let g = z2();
        let m = trivial_model(&g, Side::Left, Side::Right);
        for xs in tuples(2, 3) {
            let c = Cell::plain(xs.clone());
            assert_eq!(m.face(Sign::Plus, 1, &c).xs, xs[1..].to_vec());
            for i in 2..=3 {
                let mut e = xs.clone();
                let v = e.remove(i - 1);
                e[i - 2] ^= v;
                assert_eq!(m.face(Sign::Plus, i, &c).xs, e);
            }
        }
        assert!(check_precubical(&m, 4).passed);
        assert!(matches!(
            BoundaryModel::braided(&g, &RightModule::trivial(2), &LeftModule::trivial(2), Side::Right, Side::Right),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn braided_sign_choices_precubical() {
        let b = r3();
        for plus in [Side::Left, Side::Right] {
            for minus in [Side::Left, Side::Right] {
                let n = b.size();
                let m = BoundaryModel::braided(&b, &RightModule::adjoint(&b), &LeftModule::adjoint(&b), plus, minus)
                    .unwrap();
                assert!(check_precubical(&m, 3).passed, "{plus:?} {minus:?}");
                let t = BoundaryModel::braided(&b, &RightModule::trivial(n), &LeftModule::trivial(n), plus, minus)
                    .unwrap();
                assert!(check_precubical(&t, 4).passed);
            }
        }
    }

    #[test]
    fn birack_faces() {
        let b = r3();
        let sh = Shelf::dihedral(3);
        let m = BoundaryModel::birack(&b, &RightModule::trivial(3), &LeftModule::trivial(3)).unwrap();
        for xs in tuples(3, 3) {
            for i in 1..=3 {
                let mut e: Vec<usize> = xs[..i - 1].iter().map(|&y| sh.op(y, xs[i - 1])).collect();
                e.extend_from_slice(&xs[i..]);
                assert_eq!(m.face(Sign::Minus, i, &Cell::plain(xs.clone())).xs, e);
            }
        }
        let s = BraidedSet::from_cycle_set(&shift2());
        let m = BoundaryModel::birack(&s, &RightModule::trivial(2), &LeftModule::trivial(2)).unwrap();
        for xs in tuples(2, 2) {
            let c = Cell::plain(xs.clone());
            assert_eq!(m.face(Sign::Minus, 1, &c).xs, vec![(xs[1] + 1) % 2]);
            assert_eq!(m.face(Sign::Plus, 1, &c).xs, vec![xs[1]]);
        }
        assert!(check_precubical(&m, 4).passed);
    }

    #[test]
    fn star_family() {
        let s = BraidedSet::from_cycle_set(&shift2());
        let a = BoundaryModel::birack(&s, &RightModule::trivial(2), &LeftModule::trivial(2)).unwrap();
        let b = BoundaryModel::birack_star(&s).unwrap();
        for c in a.cells(3) {
            for i in 1..=3 {
                assert_eq!(a.face(Sign::Minus, i, &c), b.face(Sign::Minus, i, &c));
            }
        }
        let f = BoundaryModel::birack_star(&flip(3)).unwrap();
        assert_eq!(f.face(Sign::Minus, 2, &Cell::plain(vec![2, 0, 1])).xs, vec![2, 1]);
        assert!(check_precubical(&BoundaryModel::birack_star(&r3()).unwrap(), 3).passed);
    }

    #[test]
    fn degeneracy_examples() {
        let b = r3();
        let adj = RightModule::adjoint(&b);
        let model = BoundaryModel::birack(&b, &adj, &LeftModule::trivial(3))
            .unwrap()
            .with_coefficient_degeneracies()
            .unwrap();
        let sh = Shelf::dihedral(3);
        for c in model.cells(3) {
            for i in 1..=3 {
                let chi = c.xs[i..].iter().fold(c.xs[i - 1], |acc, &y| sh.op(acc, y));
                let s = model.degeneracy(i, &c).unwrap();
                assert_eq!(adj.act(s.m, chi), c.m);
            }
        }
        assert!(check_semi_strong(&model, 4).unwrap().passed);
        let plain = BoundaryModel::birack(&b, &RightModule::trivial(3), &LeftModule::trivial(3))
            .unwrap()
            .with_plain_degeneracies()
            .unwrap();
        assert!(check_semi_strong(&plain, 4).unwrap().passed);
        let s = BraidedSet::from_cycle_set(&shift2());
        let plain = BoundaryModel::birack_star(&s).unwrap().with_plain_degeneracies().unwrap();
        assert!(check_semi_strong(&plain, 4).unwrap().passed);
        let z = z2();
        assert!(BoundaryModel::birack(&z, &RightModule::trivial(2), &LeftModule::trivial(2))
            .unwrap()
            .with_coefficient_degeneracies()
            .is_ok());
    }

    #[test]
    fn classical_cubical_relations_fail_for_diagonal_doubling() {
        let model = BoundaryModel::birack(&flip(2), &RightModule::trivial(2), &LeftModule::trivial(2))
            .unwrap()
            .with_plain_degeneracies()
            .unwrap();
        let rep = check_classical_cubical(&model, 3).unwrap();
        assert!(!rep.passed);
    }

    #[test]
    fn differential_examples() {
        let c = cycle_set_complex(&shift2(), 3);
        assert!(c.differential(1).is_zero());
        assert!(c.is_complex());
        // ∂_2(x, y) = (y) − (y+1)
        let d2 = c.differential(2);
        for (j, xs) in tuples(2, 2).into_iter().enumerate() {
            let y = xs[1];
            let mut expect = [0i64; 2];
            expect[y] += 1;
            expect[(y + 1) % 2] -= 1;
            for (i, e) in expect.iter().enumerate() {
                assert_eq!(d2.get(i, j), &BigInt::from(*e));
            }
        }
        let t = cycle_set_complex(&CycleSet::trivial(3), 4);
        assert!((1..=4).all(|k| t.differential(k).is_zero()));
    }

    #[test]
    fn eta_and_split() {
        let b = r3();
        let model = BoundaryModel::birack(&b, &RightModule::trivial(3), &LeftModule::trivial(3))
            .unwrap()
            .with_coefficient_degeneracies()
            .unwrap();
        assert_eq!(model.eta_projector(1).unwrap(), IntMatrix::identity(3));
        let cert = split(&model, 2, &TEST_PAIRS).unwrap();
        assert_eq!((cert.degenerate.len(), cert.normalized_rank), (3, 6));
        assert!(cert.passed());
        let eta = model.eta_projector(2).unwrap();
        for y in 0..3 {
            let j = model.index(&Cell::plain(vec![y, y]));
            assert!((0..9).all(|i| eta.get(i, j).is_zero()));
        }
        let cert = split(&model, 1, &TEST_PAIRS).unwrap();
        assert!(cert.degenerate.is_empty() && cert.normalized_rank == 3);
        let tr = BoundaryModel::birack(&flip(2), &RightModule::trivial(2), &LeftModule::trivial(2))
            .unwrap()
            .with_plain_degeneracies()
            .unwrap();
        let cert = split(&tr, 2, &TEST_PAIRS).unwrap();
        assert_eq!((cert.degenerate.len(), cert.normalized_rank), (2, 2));
    }

    #[test]
    fn group_bar_eta() {
        let g = z2();
        let model = BoundaryModel::birack(&g, &RightModule::trivial(2), &LeftModule::trivial(2))
            .unwrap()
            .with_coefficient_degeneracies()
            .unwrap();
        let eta = model.eta_projector(2).unwrap();
        for y in 0..2 {
            let j = model.index(&Cell::plain(vec![y, y]));
            assert!((0..4).all(|i| eta.get(i, j).is_zero()));
        }
        assert!(split(&model, 3, &TEST_PAIRS).unwrap().passed());
    }

    #[test]
    fn guitar_conjugation() {
        let b = r3();
        let t = (RightModule::trivial(3), LeftModule::trivial(3));
        assert!(conjugate_by_guitar(&b, &t.0, &t.1, 3).unwrap().passed);
        assert!(conjugate_by_guitar(&flip(2), &RightModule::trivial(2), &LeftModule::trivial(2), 3).unwrap().passed);
        let s = BraidedSet::from_cycle_set(&shift2());
        assert!(conjugate_by_guitar(&s, &RightModule::adjoint(&s), &LeftModule::trivial(2), 3).unwrap().passed);
    }

    #[test]
    fn cycle_set_complex_matches_birack_family() {
        let c = shift2();
        let b = BraidedSet::from_cycle_set(&c);
        let model = BoundaryModel::birack(&b, &RightModule::trivial(2), &LeftModule::sideways_dot(&b).unwrap()).unwrap();
        let cs = cycle_set_complex(&c, 4);
        let mc = model.chain_complex(3, AlphaBeta::STANDARD);
        for k in 1..=3 {
            assert_eq!(mc.differential(k), cs.differential(k + 1));
        }
        let lnd = lnd_complex(&b, 4, false).unwrap();
        assert_eq!(lnd, cs);
    }

    #[test]
    fn lnd_complexes_are_complexes() {
        for b in [r3(), z2(), flip(2)] {
            assert!(lnd_complex(&b, 4, false).unwrap().is_complex());
            assert!(lnd_complex(&b, 4, true).unwrap().is_complex());
        }
    }
}
