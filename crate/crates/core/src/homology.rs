//! Exact integer linear algebra: Smith normal form, homology and cohomology
//! of integral chain complexes, orbits and the Betti lower bound.

use crate::complexes::{cycle_set_complex, ChainComplex};
use crate::structures::CycleSet;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().map(|x| x.into_iter().map(BigInt::from).collect()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i][j] += v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        IntMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data: rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.data[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Plain-text export: one row per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.data {
            let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<IntMatrix> {
        let mut data = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let row: std::result::Result<Vec<BigInt>, _> =
                line.split_whitespace().map(|t| t.parse::<BigInt>()).collect();
            data.push(row.map_err(|e| Error::Parse(e.to_string()))?);
        }
        let cols = data.first().map_or(0, |r: &Vec<BigInt>| r.len());
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        Ok(IntMatrix { rows: data.len(), cols, data })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// U·A·V = D with U, V unimodular; `u_inv`, `v_inv` are their inverses.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Diagonal entries d_1 | d_2 | ⋯, length min(rows, cols).
    pub diagonal: Vec<BigInt>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Recomputes U·A·V, checks U·U⁻¹ = I, V·V⁻¹ = I and the divisibility chain.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let prod = self.u.mul(a).mul(&self.v);
        prod == self.d
            && self.u.mul(&self.u_inv) == IntMatrix::identity(self.u.rows)
            && self.v.mul(&self.v_inv) == IntMatrix::identity(self.v.rows)
            && is_divisibility_chain(&self.diagonal)
            && (0..self.d.rows).all(|i| {
                (0..self.d.cols).all(|j| i == j || self.d.data[i][j].is_zero())
            })
    }
}

pub fn is_divisibility_chain(d: &[BigInt]) -> bool {
    d.iter().all(|x| !x.is_negative())
        && d.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        })
}

struct Elimination {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    // U, U⁻¹, V, V⁻¹ when tracking transforms
    tr: Option<[Vec<Vec<BigInt>>; 4]>,
}

fn id_rows(n: usize) -> Vec<Vec<BigInt>> {
    IntMatrix::identity(n).data
}

impl Elimination {
    fn new(a: &IntMatrix, track: bool) -> Self {
        let tr = track.then(|| [id_rows(a.rows), id_rows(a.rows), id_rows(a.cols), id_rows(a.cols)]);
        Elimination { a: a.data.clone(), rows: a.rows, cols: a.cols, tr }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some([u, ui, _, _]) = self.tr.as_mut() {
            u.swap(i, j);
            for r in ui.iter_mut() {
                r.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        if let Some([_, _, v, vi]) = self.tr.as_mut() {
            for r in v.iter_mut() {
                r.swap(i, j);
            }
            vi.swap(i, j);
        }
    }

    /// row_i += q·row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        let src: Vec<(usize, BigInt)> = self.a[j]
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x * q))
            .collect();
        for (c, x) in src {
            self.a[i][c] += x;
        }
        if let Some([u, ui, _, _]) = self.tr.as_mut() {
            let src: Vec<BigInt> = u[j].iter().map(|x| x * q).collect();
            for (c, x) in src.into_iter().enumerate() {
                u[i][c] += x;
            }
            // inverse: col_j −= q·col_i
            for r in ui.iter_mut() {
                let x = &r[i] * q;
                r[j] -= x;
            }
        }
    }

    /// col_i += q·col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in self.a.iter_mut() {
            if !r[j].is_zero() {
                let x = &r[j] * q;
                r[i] += x;
            }
        }
        if let Some([_, _, v, vi]) = self.tr.as_mut() {
            for r in v.iter_mut() {
                let x = &r[j] * q;
                r[i] += x;
            }
            // inverse: row_j −= q·row_i
            let src: Vec<BigInt> = vi[i].iter().map(|x| x * q).collect();
            for (c, x) in src.into_iter().enumerate() {
                vi[j][c] -= x;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -&*x;
        }
        if let Some([u, ui, _, _]) = self.tr.as_mut() {
            for x in u[i].iter_mut() {
                *x = -&*x;
            }
            for r in ui.iter_mut() {
                r[i] = -&r[i];
            }
        }
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|b| ax < b.2) {
                    let one = ax.is_one();
                    best = Some((i, j, ax));
                    if one {
                        let b = best.unwrap();
                        return Some((b.0, b.1));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    /// Clears row t and column t outside the pivot, re-choosing the pivot by
    /// minimal absolute value whenever a remainder survives.
    fn clear_cross(&mut self, t: usize) {
        loop {
            let mut clean = true;
            for i in t + 1..self.rows {
                if self.a[i][t].is_zero() {
                    continue;
                }
                let q = -(&self.a[i][t] / &self.a[t][t]);
                self.add_row(i, t, &q);
                if !self.a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..self.cols {
                if self.a[t][j].is_zero() {
                    continue;
                }
                let q = -(&self.a[t][j] / &self.a[t][t]);
                self.add_col(j, t, &q);
                if !self.a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                return;
            }
            let mut best = (t, t, self.a[t][t].abs());
            for i in t + 1..self.rows {
                let x = self.a[i][t].abs();
                if !x.is_zero() && x < best.2 {
                    best = (i, t, x);
                }
            }
            for j in t + 1..self.cols {
                let x = self.a[t][j].abs();
                if !x.is_zero() && x < best.2 {
                    best = (t, j, x);
                }
            }
            self.swap_rows(t, best.0);
            self.swap_cols(t, best.1);
        }
    }

    fn run(&mut self) -> Vec<BigInt> {
        let k = self.rows.min(self.cols);
        let mut t = 0;
        while t < k {
            let Some((p, q)) = self.min_pivot(t) else { break };
            self.swap_rows(t, p);
            self.swap_cols(t, q);
            loop {
                self.clear_cross(t);
                // divisibility repair: fold an offending row into the pivot row
                let piv = self.a[t][t].clone();
                let bad = (t + 1..self.rows).find(|&i| {
                    (t + 1..self.cols).any(|j| !(&self.a[i][j] % &piv).is_zero())
                });
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        (0..k).map(|i| self.a[i][i].clone()).collect()
    }
}

/// Full Smith normal form with transforms.
pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let mut e = Elimination::new(a, true);
    let diagonal = e.run();
    let [u, u_inv, v, v_inv] = e.tr.take().unwrap();
    let wrap = |data: Vec<Vec<BigInt>>, n: usize| IntMatrix { rows: n, cols: n, data };
    Snf {
        u: wrap(u, a.rows),
        u_inv: wrap(u_inv, a.rows),
        d: IntMatrix { rows: a.rows, cols: a.cols, data: e.a },
        v: wrap(v, a.cols),
        v_inv: wrap(v_inv, a.cols),
        diagonal,
    }
}

/// Smith diagonal only (no transforms).
pub fn smith_diagonal(a: &IntMatrix) -> Vec<BigInt> {
    Elimination::new(a, false).run()
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_diagonal(a).iter().filter(|d| !d.is_zero()).count()
}

/// H_k as Betti number plus invariant factors > 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<u64>,
}

fn torsion_of(diag: &[BigInt]) -> Vec<u64> {
    diag.iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| d.to_u64().expect("torsion factor fits in u64"))
        .collect()
}

/// H_k = ker ∂_k / im ∂_{k+1}.
pub fn homology_at(c: &ChainComplex, k: usize) -> Result<HomologyResult> {
    if k + 1 > c.max_degree() {
        return Err(Error::DegreeOutOfRange(k));
    }
    if !c.differential(k).mul(c.differential(k + 1)).is_zero() {
        return Err(Error::NotAComplex(k));
    }
    let dk = smith_diagonal(c.differential(k));
    let dk1 = smith_diagonal(c.differential(k + 1));
    let rk = dk.iter().filter(|d| !d.is_zero()).count();
    let rk1 = dk1.iter().filter(|d| !d.is_zero()).count();
    Ok(HomologyResult { degree: k, betti: c.dim(k) - rk - rk1, torsion: torsion_of(&dk1) })
}

/// All H_k for k = 0..max_degree−1.
pub fn homology_all(c: &ChainComplex) -> Result<Vec<HomologyResult>> {
    (0..c.max_degree()).map(|k| homology_at(c, k)).collect()
}

/// Orbits of x ∼ y·x, as sorted blocks.
pub fn orbits(c: &CycleSet) -> Vec<Vec<usize>> {
    let n = c.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let nx = p[x];
            p[x] = r;
            x = nx;
        }
        r
    }
    for y in 0..n {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, c.op(y, x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_block = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if root_block[r] == usize::MAX {
            root_block[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[root_block[r]].push(x);
    }
    blocks
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiBound {
    pub degree: usize,
    pub betti: usize,
    pub bound: usize,
    pub pass: bool,
}

/// β_k ≥ m^k with m the number of orbits.
pub fn betti_bound_check(c: &CycleSet, k: usize) -> Result<BettiBound> {
    let cx = cycle_set_complex(c, k + 1);
    let h = homology_at(&cx, k)?;
    let bound = orbits(c).len().pow(k as u32);
    Ok(BettiBound { degree: k, betti: h.betti, bound, pass: h.betti >= bound })
}

/// A = ∏ Z/k_i, elements encoded by mixed-radix rank (first modulus least significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.iter().any(|&k| k < 2) {
            return Err(Error::Range("moduli must be at least 2".into()));
        }
        Ok(FiniteAbelianGroup { moduli })
    }

    pub fn cyclic(k: u64) -> Self {
        Self::new(vec![k]).expect("modulus at least 2")
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    pub fn residues(&self, mut x: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&k| {
                let r = x as u64 % k;
                x /= k as usize;
                r
            })
            .collect()
    }

    pub fn encode(&self, res: &[u64]) -> usize {
        self.moduli
            .iter()
            .zip(res)
            .rev()
            .fold(0usize, |acc, (&k, &r)| acc * k as usize + (r % k) as usize)
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.residues(a), self.residues(b));
        let s: Vec<u64> = ra.iter().zip(&rb).zip(&self.moduli).map(|((x, y), k)| (x + y) % k).collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let r: Vec<u64> = self.residues(a).iter().zip(&self.moduli).map(|(x, k)| (k - x) % k).collect();
        self.encode(&r)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Addition table, for hot loops.
    pub fn add_table(&self) -> Vec<Vec<usize>> {
        let o = self.order();
        (0..o).map(|a| (0..o).map(|b| self.add(a, b)).collect()).collect()
    }
}

/// |Z^n|, |B^n| and H^n as invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyResult {
    pub degree: usize,
    pub cocycles: u128,
    pub coboundaries: u128,
    pub invariants: Vec<u64>,
}

impl CohomologyResult {
    pub fn order(&self) -> u128 {
        self.invariants.iter().map(|&x| x as u128).product()
    }
}

fn gcd_u64(a: &BigInt, k: u64) -> u64 {
    a.abs().gcd(&BigInt::from(k)).to_u64().unwrap()
}

/// Cohomology with Z/k coefficients from the cochain differentials f ↦ f∘∂.
///
/// Cochains are row vectors f with f·∂_{n+1} ≡ 0 (mod k) for cocycles. With
/// U·∂_{n+1}·V = S and g = f·U⁻¹ the condition reads g_i·s_i ≡ 0, so the lift
/// Z̃ ⊂ Z^N has basis rows c_i·U_i with c_i = k / gcd(s_i, k). H is Z̃ modulo
/// the rows of ∂_n together with k·Z^N, read off in that basis.
fn cohomology_cyclic(c: &ChainComplex, n: usize, k: u64) -> (u128, u128, Vec<u64>) {
    let dim = c.dim(n);
    let snf = smith_normal_form(c.differential(n + 1));
    let diag: Vec<BigInt> = (0..dim)
        .map(|i| snf.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero))
        .collect();
    let z: u128 = diag.iter().map(|d| gcd_u64(d, k) as u128).product();
    let dn = c.differential(n);
    let b: u128 = smith_diagonal(dn)
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| (k / gcd_u64(d, k)) as u128)
        .product();
    let cvec: Vec<BigInt> = diag.iter().map(|d| BigInt::from(k / gcd_u64(d, k))).collect();
    let mut kid = IntMatrix::identity(dim);
    for i in 0..dim {
        kid.data[i][i] = BigInt::from(k);
    }
    let mut coords = dn.vstack(&kid).mul(&snf.u_inv);
    for r in coords.data.iter_mut() {
        for (j, x) in r.iter_mut().enumerate() {
            debug_assert!((&*x % &cvec[j]).is_zero());
            *x = &*x / &cvec[j];
        }
    }
    let h: Vec<u64> = smith_diagonal(&coords)
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("finite quotient"))
        .collect();
    (z, b, h)
}

fn factor(mut x: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        let mut e = 0;
        while x.is_multiple_of(p) {
            x /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

/// Invariant factors d_1 | d_2 | ⋯ of a direct sum of cyclic groups.
pub fn invariant_factors(cyclic: &[u64]) -> Vec<u64> {
    use std::collections::BTreeMap;
    let mut powers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &c in cyclic {
        for (p, e) in factor(c) {
            powers.entry(p).or_default().push(p.pow(e));
        }
    }
    let len = powers.values().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for v in powers.values_mut() {
        v.sort_unstable();
        let off = len - v.len();
        for (i, q) in v.iter().enumerate() {
            out[off + i] *= q;
        }
    }
    out
}

/// Cohomology H^n of a chain complex with coefficients in A.
pub fn cohomology(c: &ChainComplex, n: usize, a: &FiniteAbelianGroup) -> Result<CohomologyResult> {
    if n + 1 > c.max_degree() {
        return Err(Error::DegreeOutOfRange(n));
    }
    let mut z = 1u128;
    let mut b = 1u128;
    let mut cyc = Vec::new();
    for &k in a.moduli() {
        let (zk, bk, hk) = cohomology_cyclic(c, n, k);
        z *= zk;
        b *= bk;
        cyc.extend(hk);
    }
    Ok(CohomologyResult { degree: n, cocycles: z, coboundaries: b, invariants: invariant_factors(&cyc) })
}

/// Cycle-set cohomology in degree 1 or 2.
pub fn cohomology_groups(c: &CycleSet, degree: usize, a: &FiniteAbelianGroup) -> Result<CohomologyResult> {
    if !(1..=2).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    cohomology(&cycle_set_complex(c, degree + 1), degree, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        let i = IntMatrix::identity(3);
        let s = smith_normal_form(&i);
        assert!(s.verify(&i));
        assert_eq!(s.u, i);
        assert_eq!(s.v, i);
        let z = IntMatrix::from_rows(vec![vec![0]]);
        assert_eq!(smith_normal_form(&z).diagonal, big(&[0]));
        let a = IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.diagonal, big(&[2, 4]));
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
    }

    #[test]
    fn snf_needs_repair() {
        // diag(2,3) is diagonal but not a divisibility chain
        let a = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.diagonal, big(&[1, 6]));
        let a = IntMatrix::from_rows(vec![vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10], vec![0, 0, 0]]);
        let s = smith_normal_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.diagonal, big(&[2, 2, 60]));
    }

    #[test]
    fn determinant_examples() {
        let a = IntMatrix::from_rows(vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert_eq!(a.determinant(), BigInt::from(18));
        let a = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.determinant(), BigInt::from(-1));
    }

    #[test]
    fn text_round_trip() {
        let a = IntMatrix::from_rows(vec![vec![1, -2], vec![0, 3]]);
        assert_eq!(a.to_text(), "1 -2\n0 3\n");
        assert_eq!(IntMatrix::from_text(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn invariant_factor_examples() {
        assert_eq!(invariant_factors(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors(&[2, 4, 3]), vec![2, 12]);
        assert_eq!(invariant_factors(&[]), Vec::<u64>::new());
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbits(&CycleSet::trivial(3)), vec![vec![0], vec![1], vec![2]]);
        let s = CycleSet::new(vec![vec![1, 0], vec![1, 0]]).unwrap();
        assert_eq!(orbits(&s), vec![vec![0, 1]]);
        let p = CycleSet::permutation(&[1, 0, 2]).unwrap();
        assert_eq!(orbits(&p), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn group_encoding() {
        let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        for x in 0..6 {
            assert_eq!(g.encode(&g.residues(x)), x);
            assert_eq!(g.add(x, g.neg(x)), 0);
        }
        assert!(FiniteAbelianGroup::new(vec![1]).is_err());
    }

    fn shift2() -> CycleSet {
        CycleSet::new(vec![vec![1, 0], vec![1, 0]]).unwrap()
    }

    // Independent count of (|Z²|, |B²|) over Z/k by enumerating every cochain and every γ.
    fn brute_h2(c: &CycleSet, k: usize) -> (u128, u128) {
        let n = c.size();
        let total = k.pow((n * n) as u32);
        let f_at = |idx: usize, x: usize, y: usize| (idx / k.pow((x * n + y) as u32)) % k;
        let z = (0..total)
            .filter(|&i| {
                crate::tuples(n, 3).iter().all(|t| {
                    let (x, y, w) = (t[0], t[1], t[2]);
                    (f_at(i, x, w) + f_at(i, c.op(x, y), c.op(x, w))) % k
                        == (f_at(i, y, w) + f_at(i, c.op(y, x), c.op(y, w))) % k
                })
            })
            .count();
        let mut bs = std::collections::HashSet::new();
        for g in crate::tuples(k, n) {
            let f: Vec<usize> = crate::tuples(n, 2).iter().map(|t| (g[t[1]] + k - g[c.op(t[0], t[1])]) % k).collect();
            bs.insert(f);
        }
        (z as u128, bs.len() as u128)
    }

    #[test]
    fn homology_examples() {
        let t = cycle_set_complex(&CycleSet::trivial(2), 3);
        assert_eq!(homology_at(&t, 2).unwrap(), HomologyResult { degree: 2, betti: 4, torsion: vec![] });
        let s = cycle_set_complex(&shift2(), 3);
        assert_eq!(homology_at(&s, 1).unwrap().betti, 1);
        assert!(homology_at(&s, 3).is_err());
        for n in 1..=3 {
            let t = cycle_set_complex(&CycleSet::trivial(n), 5);
            for k in 0..=4 {
                assert_eq!(homology_at(&t, k).unwrap().betti, n.pow(k as u32));
            }
        }
        let b = betti_bound_check(&shift2(), 2).unwrap();
        assert!(b.pass && b.bound == 1 && b.betti >= 1);
        assert_eq!(betti_bound_check(&CycleSet::trivial(2), 3).unwrap().betti, 8);
    }

    #[test]
    fn not_a_complex() {
        let d1 = IntMatrix::from_rows(vec![vec![1]]);
        let d2 = IntMatrix::from_rows(vec![vec![1]]);
        let c = ChainComplex::new(vec![1, 1, 1], vec![IntMatrix::zeros(0, 1), d1, d2]).unwrap();
        assert_eq!(homology_at(&c, 1), Err(Error::NotAComplex(1)));
    }

    #[test]
    fn cohomology_examples() {
        let a = FiniteAbelianGroup::cyclic(2);
        let h = cohomology_groups(&CycleSet::trivial(2), 2, &a).unwrap();
        assert_eq!((h.cocycles, h.coboundaries, h.order()), (16, 1, 16));
        assert_eq!(h.invariants, vec![2, 2, 2, 2]);
        for c in [CycleSet::trivial(3), shift2(), CycleSet::permutation(&[1, 0, 2]).unwrap()] {
            for k in [2u64, 3, 4] {
                let h1 = cohomology_groups(&c, 1, &FiniteAbelianGroup::cyclic(k)).unwrap();
                assert_eq!(h1.order(), (k as u128).pow(orbits(&c).len() as u32));
            }
        }
        assert!(matches!(cohomology_groups(&shift2(), 3, &a), Err(Error::UnsupportedDegree(3))));
    }

    #[test]
    fn cohomology_matches_brute_force() {
        let fixtures = [
            shift2(),
            CycleSet::trivial(2),
            CycleSet::permutation(&[1, 2, 0]).unwrap(),
            CycleSet::permutation(&[1, 0, 2]).unwrap(),
        ];
        for c in &fixtures {
            for k in [2usize, 3] {
                if c.size() == 3 && k == 3 {
                    continue;
                }
                let h = cohomology_groups(c, 2, &FiniteAbelianGroup::cyclic(k as u64)).unwrap();
                let (z, b) = brute_h2(c, k);
                assert_eq!((h.cocycles, h.coboundaries), (z, b), "{c:?} Z/{k}");
                assert_eq!(h.order(), z / b);
            }
        }
    }

    #[test]
    fn composite_coefficients_split() {
        let c = CycleSet::permutation(&[1, 2, 0]).unwrap();
        let a = cohomology_groups(&c, 2, &FiniteAbelianGroup::cyclic(6)).unwrap();
        let b = cohomology_groups(&c, 2, &FiniteAbelianGroup::new(vec![2, 3]).unwrap()).unwrap();
        assert_eq!(a.invariants, b.invariants);
        assert_eq!(a.cocycles, b.cocycles);
    }
}
