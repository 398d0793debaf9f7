//! 2-cocycles with values in a finite abelian group, abelian extensions A ×_f X,
//! cohomologous cocycles and the function-module bridge to group cohomology.
//!
//! Sign convention: ∂¹γ(x,y) = γ(y) − γ(x·y). The star analogue uses ⊸ in
//! place of ·, and then ω(∂⁰γ) = ∂¹_⋆γ with ∂⁰γ(x) = γ − γ·x.

use crate::homology::{smith_normal_form, FiniteAbelianGroup, IntMatrix};
use crate::structures::{BraidedSet, CycleSet, Table};
use crate::{CheckReport, Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Largest cochain space swept by brute force.
pub const COCHAIN_BUDGET: u128 = 1 << 22;

/// Above this many maps γ: X → A, equivalence is decided by linear algebra.
pub const GAMMA_SEARCH_LIMIT: u128 = 4096;

/// f: X × X → A, values stored as group-element ranks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cochain2 {
    pub base: usize,
    pub group: FiniteAbelianGroup,
    pub values: Vec<Vec<usize>>,
}

impl Cochain2 {
    pub fn new(group: &FiniteAbelianGroup, values: Vec<Vec<usize>>) -> Result<Self> {
        let n = values.len();
        if values.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("cochain table must be square".into()));
        }
        if values.iter().flatten().any(|&v| v >= group.order()) {
            return Err(Error::Range("cochain value is not a group element".into()));
        }
        Ok(Cochain2 { base: n, group: group.clone(), values })
    }

    pub fn zero(n: usize, group: &FiniteAbelianGroup) -> Self {
        Cochain2 { base: n, group: group.clone(), values: vec![vec![0; n]; n] }
    }

    pub fn from_fn(n: usize, group: &FiniteAbelianGroup, f: impl Fn(usize, usize) -> usize) -> Self {
        let values = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Cochain2 { base: n, group: group.clone(), values }
    }

    /// f(x,y) = a1 if x = y, a0 otherwise.
    pub fn delta(n: usize, group: &FiniteAbelianGroup, a0: usize, a1: usize) -> Self {
        Self::from_fn(n, group, |x, y| if x == y { a1 } else { a0 })
    }

    /// The cochain numbered `idx` in the mixed-radix enumeration of A^{n²}.
    pub fn from_index(n: usize, group: &FiniteAbelianGroup, mut idx: u128) -> Self {
        let o = group.order() as u128;
        let mut values = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                values[x][y] = (idx % o) as usize;
                idx /= o;
            }
        }
        Cochain2 { base: n, group: group.clone(), values }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.values[x][y]
    }

    pub fn add(&self, other: &Cochain2) -> Cochain2 {
        Self::from_fn(self.base, &self.group, |x, y| self.group.add(self.get(x, y), other.get(x, y)))
    }

    pub fn sub(&self, other: &Cochain2) -> Cochain2 {
        Self::from_fn(self.base, &self.group, |x, y| self.group.sub(self.get(x, y), other.get(x, y)))
    }

    pub fn neg(&self) -> Cochain2 {
        Self::from_fn(self.base, &self.group, |x, y| self.group.neg(self.get(x, y)))
    }
}

/// Number of cochains X² → A, or TooLarge past the budget.
pub fn cochain_count(n: usize, group: &FiniteAbelianGroup) -> Result<u128> {
    let o = group.order() as u128;
    let mut total: u128 = 1;
    for _ in 0..n * n {
        total = total.saturating_mul(o);
        if total > COCHAIN_BUDGET {
            return Err(Error::TooLarge(format!("|A|^{} cochains", n * n)));
        }
    }
    Ok(total)
}

fn check_size(n: usize, f: &Cochain2) -> Result<()> {
    if f.base != n {
        return Err(Error::SizeMismatch(format!("cochain on {} points, structure on {n}", f.base)));
    }
    Ok(())
}

/// f(x,z) + f(x·y, x·z) = f(y,z) + f(y·x, y·z).
pub fn is_2cocycle(c: &CycleSet, f: &Cochain2) -> Result<bool> {
    check_size(c.size(), f)?;
    Ok(sideways_cocycle(c.size(), f, |x, y| c.op(x, y), |x, y| c.op(x, y), |x, y| c.op(x, y)))
}

/// f(x,z) + f(p(x,y), q(x,z)) = f(y,z) + f(p_rhs(y,x), q(y,z)) over all triples.
fn sideways_cocycle(
    n: usize,
    f: &Cochain2,
    p: impl Fn(usize, usize) -> usize,
    p_rhs: impl Fn(usize, usize) -> usize,
    q: impl Fn(usize, usize) -> usize,
) -> bool {
    let a = &f.group;
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let lhs = a.add(f.get(x, z), f.get(p(x, y), q(x, z)));
                let rhs = a.add(f.get(y, z), f.get(p_rhs(y, x), q(y, z)));
                lhs == rhs
            })
        })
    })
}

/// f(x,z) + f(x·y, x·z) = f(y,z) + f(y⊸x, y·z).
pub fn is_lnd_2cocycle(b: &BraidedSet, f: &Cochain2) -> Result<bool> {
    b.require_lnd()?;
    check_size(b.size(), f)?;
    Ok(sideways_cocycle(b.size(), f, |x, y| b.dot(x, y), |y, x| b.lolli(y, x), |x, z| b.dot(x, z)))
}

/// f*(x,z) + f*(x⊸y, x⊸z) = f*(y,z) + f*(y·x, y⊸z).
pub fn is_star_2cocycle(b: &BraidedSet, f: &Cochain2) -> Result<bool> {
    b.require_lnd()?;
    check_size(b.size(), f)?;
    Ok(sideways_cocycle(b.size(), f, |x, y| b.lolli(x, y), |y, x| b.dot(y, x), |x, z| b.lolli(x, z)))
}

/// f(x,z) + f*(x·y, x·z) = f*(y,z) + f(y⊸x, y⊸z).
pub fn compatible_pair(b: &BraidedSet, f: &Cochain2, fs: &Cochain2) -> Result<bool> {
    b.require_lnd()?;
    check_size(b.size(), f)?;
    check_size(b.size(), fs)?;
    let a = &f.group;
    let n = b.size();
    Ok((0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let lhs = a.add(f.get(x, z), fs.get(b.dot(x, y), b.dot(x, z)));
                let rhs = a.add(fs.get(y, z), f.get(b.lolli(y, x), b.lolli(y, z)));
                lhs == rhs
            })
        })
    }))
}

/// ∂¹γ(x,y) = γ(y) − γ(x·y).
pub fn coboundary(c: &CycleSet, group: &FiniteAbelianGroup, gamma: &[usize]) -> Cochain2 {
    Cochain2::from_fn(c.size(), group, |x, y| group.sub(gamma[y], gamma[c.op(x, y)]))
}

/// ∂¹_⋆γ(x,y) = γ(y) − γ(x⊸y).
pub fn star_coboundary(b: &BraidedSet, group: &FiniteAbelianGroup, gamma: &[usize]) -> Result<Cochain2> {
    b.require_lnd()?;
    Ok(Cochain2::from_fn(b.size(), group, |x, y| group.sub(gamma[y], gamma[b.lolli(x, y)])))
}

/// An abelian extension A ×_f X; total index = (group rank)·n + x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionDescriptor {
    pub base: CycleSet,
    pub group: FiniteAbelianGroup,
    pub cocycle: Cochain2,
    pub total: CycleSet,
    pub projection: Vec<usize>,
    /// action[α][t] = α acting on the total element t
    pub action: Table,
}

impl ExtensionDescriptor {
    pub fn element(&self, alpha: usize, x: usize) -> usize {
        alpha * self.base.size() + x
    }

    /// Projection is a morphism, A acts regularly on fibers, and
    /// (αy)·z = y·z, y·(αz) = α(y·z).
    pub fn check_invariants(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let t = &self.total;
        let p = &self.projection;
        let n = self.base.size();
        let o = self.group.order();
        for u in 0..t.size() {
            for v in 0..t.size() {
                rep.record(p[t.op(u, v)] == self.base.op(p[u], p[v]), || format!("projection fails on ({u},{v})"));
            }
        }
        for x in 0..n {
            let mut fiber: Vec<usize> = (0..o).map(|a| self.action[a][self.element(0, x)]).collect();
            rep.record(fiber.iter().all(|&e| p[e] == x), || format!("action leaves fiber {x}"));
            fiber.sort_unstable();
            fiber.dedup();
            rep.record(fiber.len() == o, || format!("action not regular on fiber {x}"));
        }
        for a in 0..o {
            for y in 0..t.size() {
                for z in 0..t.size() {
                    let ay = self.action[a][y];
                    let az = self.action[a][z];
                    rep.record(t.op(ay, z) == t.op(y, z), || format!("(αy)·z != y·z at {a},{y},{z}"));
                    rep.record(t.op(y, az) == self.action[a][t.op(y, z)], || {
                        format!("y·(αz) != α(y·z) at {a},{y},{z}")
                    });
                }
            }
        }
        rep
    }
}

/// The table of A ×_f X without validation: (α,x)·(β,y) = (β + f(x,y), x·y).
pub fn extension_table(c: &CycleSet, f: &Cochain2) -> Table {
    let n = c.size();
    let a = &f.group;
    let o = a.order();
    let mut t = vec![vec![0; o * n]; o * n];
    for al in 0..o {
        for x in 0..n {
            for be in 0..o {
                for y in 0..n {
                    t[al * n + x][be * n + y] = a.add(be, f.get(x, y)) * n + c.op(x, y);
                }
            }
        }
    }
    t
}

/// Builds A ×_f X; the result is validated as a cycle set.
pub fn extend_unchecked(c: &CycleSet, f: &Cochain2) -> Result<CycleSet> {
    check_size(c.size(), f)?;
    CycleSet::new(extension_table(c, f))
}

pub fn extend(c: &CycleSet, f: &Cochain2) -> Result<ExtensionDescriptor> {
    if !is_2cocycle(c, f)? {
        return Err(Error::NotACocycle);
    }
    let total = extend_unchecked(c, f)?;
    let n = c.size();
    let g = &f.group;
    let o = g.order();
    let projection = (0..o * n).map(|t| t % n).collect();
    let action = (0..o)
        .map(|a| (0..o * n).map(|t| g.add(a, t / n) * n + t % n).collect())
        .collect();
    Ok(ExtensionDescriptor {
        base: c.clone(),
        group: g.clone(),
        cocycle: f.clone(),
        total,
        projection,
        action,
    })
}

/// The f with f(x₁,x₂)·s(x₁·x₂) = s(x₁)·s(x₂).
pub fn section_cocycle(e: &ExtensionDescriptor, s: &[usize]) -> Result<Cochain2> {
    let n = e.base.size();
    if s.len() != n || s.iter().enumerate().any(|(x, &t)| t >= e.total.size() || e.projection[t] != x) {
        return Err(Error::NotASection);
    }
    let g = &e.group;
    Ok(Cochain2::from_fn(n, g, |x, y| {
        let prod = e.total.op(s[x], s[y]);
        g.sub(prod / n, s[e.base.op(x, y)] / n)
    }))
}

/// Is there γ with g − f = γ(x·y) − γ(y)?
pub fn extensions_equivalent(c: &CycleSet, f: &Cochain2, g: &Cochain2) -> Result<bool> {
    check_size(c.size(), f)?;
    check_size(c.size(), g)?;
    if f.group != g.group {
        return Err(Error::SizeMismatch("cochains take values in different groups".into()));
    }
    let diff = g.sub(f);
    let a = &f.group;
    let n = c.size();
    let space = (a.order() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space <= GAMMA_SEARCH_LIMIT {
        let target = diff.neg();
        Ok((0..space).into_par_iter().any(|i| {
            let gamma = gamma_from_index(n, a.order(), i);
            coboundary(c, a, &gamma) == target
        }))
    } else {
        Ok(is_coboundary_linear(c, &diff))
    }
}

fn gamma_from_index(n: usize, o: usize, mut i: u128) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let v = (i % o as u128) as usize;
            i /= o as u128;
            v
        })
        .collect()
}

/// Solves γ(x·y) − γ(y) = h(x,y) factor by factor with a Smith form.
fn is_coboundary_linear(c: &CycleSet, h: &Cochain2) -> bool {
    let n = c.size();
    let mut m = IntMatrix::zeros(n * n, n);
    for x in 0..n {
        for y in 0..n {
            m.add_to(x * n + y, c.op(x, y), 1);
            m.add_to(x * n + y, y, -1);
        }
    }
    let snf = smith_normal_form(&m);
    h.group.moduli().iter().enumerate().all(|(j, &k)| {
        let rhs: Vec<BigInt> = (0..n * n)
            .map(|r| BigInt::from(h.group.residues(h.get(r / n, r % n))[j]))
            .collect();
        let kb = BigInt::from(k);
        (0..n * n).all(|i| {
            let hi: BigInt = (0..n * n).map(|r| snf.u.get(i, r) * &rhs[r]).sum();
            let hi = hi.mod_floor(&kb);
            let s = snf.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
            let g = s.gcd(&kb);
            (hi % g).is_zero()
        })
    })
}

/// All 2-cocycles X² → A, by exhaustive sweep.
pub fn all_2cocycles(c: &CycleSet, group: &FiniteAbelianGroup) -> Result<Vec<Cochain2>> {
    let total = cochain_count(c.size(), group)?;
    Ok((0..total)
        .into_par_iter()
        .map(|i| Cochain2::from_index(c.size(), group, i))
        .filter(|f| is_2cocycle(c, f).unwrap())
        .collect())
}

/// All coboundaries ∂¹γ.
pub fn all_coboundaries(c: &CycleSet, group: &FiniteAbelianGroup) -> Result<HashSet<Cochain2>> {
    let n = c.size();
    let space = (group.order() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space > COCHAIN_BUDGET {
        return Err(Error::TooLarge(format!("|A|^{n} maps γ")));
    }
    Ok((0..space).map(|i| coboundary(c, group, &gamma_from_index(n, group.order(), i))).collect())
}

/// Partitions Z² into cohomology classes; returns one representative per class.
pub fn extension_classes(c: &CycleSet, group: &FiniteAbelianGroup) -> Result<Vec<Cochain2>> {
    let cocycles = all_2cocycles(c, group)?;
    let bounds: Vec<Cochain2> = all_coboundaries(c, group)?.into_iter().collect();
    let mut seen: HashSet<Cochain2> = HashSet::new();
    let mut reps = Vec::new();
    for f in cocycles {
        if seen.contains(&f) {
            continue;
        }
        for b in &bounds {
            seen.insert(f.add(b));
        }
        reps.push(f);
    }
    Ok(reps)
}

pub fn count_extension_classes(c: &CycleSet, group: &FiniteAbelianGroup) -> Result<usize> {
    Ok(extension_classes(c, group)?.len())
}

/// The braiding on A × X with (α,x)·(β,y) = (β+f(x,y), x·y) and
/// (α,x)⊸(β,y) = (β+f*(x,y), x⊸y), rebuilt from σ(b⊸a, b) = (a·b, a), then validated.
pub fn extend_braided_unchecked(b: &BraidedSet, f: &Cochain2, fs: &Cochain2) -> Result<BraidedSet> {
    b.require_lnd()?;
    check_size(b.size(), f)?;
    check_size(b.size(), fs)?;
    let n = b.size();
    let g = &f.group;
    let o = g.order();
    let size = o * n;
    let split = |u: usize| (u / n, u % n);
    let dot = |u: usize, v: usize| {
        let ((_, x), (be, y)) = (split(u), split(v));
        g.add(be, f.get(x, y)) * n + b.dot(x, y)
    };
    let lolli = |u: usize, v: usize| {
        let ((_, x), (be, y)) = (split(u), split(v));
        g.add(be, fs.get(x, y)) * n + b.lolli(x, y)
    };
    let mut left = vec![vec![0; size]; size];
    let mut right = vec![vec![0; size]; size];
    for v in 0..size {
        // a ↦ v⊸a is a bijection; σ(v⊸a, v) = (a·v, a)
        for a in 0..size {
            let u = lolli(v, a);
            left[u][v] = dot(a, v);
            right[u][v] = a;
        }
    }
    BraidedSet::new(left, right)
}

pub fn extend_braided(b: &BraidedSet, f: &Cochain2, fs: &Cochain2) -> Result<BraidedSet> {
    if !is_lnd_2cocycle(b, f)? {
        return Err(Error::NotCompatible("f is not an LND 2-cocycle".into()));
    }
    if !is_star_2cocycle(b, fs)? {
        return Err(Error::NotCompatible("f* is not a star 2-cocycle".into()));
    }
    if !compatible_pair(b, f, fs)? {
        return Err(Error::NotCompatible("f and f* are not compatible".into()));
    }
    let out = extend_braided_unchecked(b, f, fs)?;
    if !out.is_left_nondegenerate() {
        return Err(Error::NotLeftNondegenerate);
    }
    Ok(out)
}

/// (γ·a)(b) = γ(a⊸b).
pub fn fun_module_action(b: &BraidedSet, gamma: &[usize], a: usize) -> Result<Vec<usize>> {
    b.require_lnd()?;
    Ok((0..b.size()).map(|x| gamma[b.lolli(a, x)]).collect())
}

/// Acting by the word (x⊸y)x equals acting by (y·x)y, for every indicator function γ.
pub fn fun_word_relation_check(b: &BraidedSet) -> Result<CheckReport> {
    b.require_lnd()?;
    let n = b.size();
    let mut rep = CheckReport::new();
    for e in 0..n {
        let gamma: Vec<usize> = (0..n).map(|v| usize::from(v == e)).collect();
        for x in 0..n {
            for y in 0..n {
                let lhs = fun_module_action(b, &fun_module_action(b, &gamma, b.lolli(x, y))?, x)?;
                let rhs = fun_module_action(b, &fun_module_action(b, &gamma, b.dot(y, x))?, y)?;
                rep.record(lhs == rhs, || format!("word relation fails at x={x}, y={y}, γ=δ_{e}"));
            }
        }
    }
    Ok(rep)
}

/// θ(x) = f(x, −) as a function X → A.
pub fn nu(f: &Cochain2) -> Vec<Vec<usize>> {
    f.values.clone()
}

/// Inverse of `nu`.
pub fn omega(theta: &[Vec<usize>], group: &FiniteAbelianGroup) -> Cochain2 {
    Cochain2 { base: theta.len(), group: group.clone(), values: theta.to_vec() }
}

/// ι_f(x) = (x, θ(x)) respects (x⊸y)x = (y·x)y in X ⋉ Fun(X, A):
/// θ(x⊸y)·x + θ(x) = θ(y·x)·y + θ(y).
pub fn nu_relation_check(b: &BraidedSet, f: &Cochain2) -> Result<bool> {
    b.require_lnd()?;
    check_size(b.size(), f)?;
    let n = b.size();
    let g = &f.group;
    let theta = nu(f);
    for x in 0..n {
        for y in 0..n {
            let l = fun_module_action(b, &theta[b.lolli(x, y)], x)?;
            let r = fun_module_action(b, &theta[b.dot(y, x)], y)?;
            for v in 0..n {
                if g.add(l[v], theta[x][v]) != g.add(r[v], theta[y][v]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// ω(∂⁰γ) = ∂¹_⋆γ where (∂⁰γ)(x) = γ − γ·x.
pub fn omega_coboundary_check(b: &BraidedSet, group: &FiniteAbelianGroup, gamma: &[usize]) -> Result<bool> {
    b.require_lnd()?;
    let n = b.size();
    let mut theta = Vec::with_capacity(n);
    for x in 0..n {
        let gx = fun_module_action(b, gamma, x)?;
        theta.push((0..n).map(|v| group.sub(gamma[v], gx[v])).collect::<Vec<_>>());
    }
    Ok(omega(&theta, group) == star_coboundary(b, group, gamma)?)
}

/// |B²| by enumeration of all γ.
pub fn coboundary_group_order(c: &CycleSet, group: &FiniteAbelianGroup) -> Result<u128> {
    Ok(all_coboundaries(c, group)?.len() as u128)
}
