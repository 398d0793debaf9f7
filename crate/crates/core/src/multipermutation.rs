//! Square-freeness, retraction, multipermutation level, the doubling
//! construction, isomorph-free cycle-set enumeration and the N_m table.

use crate::extensions::{extend, Cochain2, ExtensionDescriptor};
use crate::homology::FiniteAbelianGroup;
use crate::structures::{is_permutation, CycleSet, Table};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

pub fn is_square_free(c: &CycleSet) -> bool {
    (0..c.size()).all(|x| c.op(x, x) == x)
}

pub fn is_nondegenerate(c: &CycleSet) -> bool {
    is_permutation(&c.squaring())
}

/// Quotient by a ≈ a' ⟺ a·− = a'·−, with the class of each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Retraction {
    pub quotient: CycleSet,
    pub projection: Vec<usize>,
}

pub fn retraction(c: &CycleSet) -> Result<Retraction> {
    if !is_nondegenerate(c) {
        return Err(Error::Degenerate);
    }
    let n = c.size();
    let mut reps: Vec<usize> = Vec::new();
    let mut projection = vec![0; n];
    for a in 0..n {
        match reps.iter().position(|&r| c.table()[r] == c.table()[a]) {
            Some(i) => projection[a] = i,
            None => {
                projection[a] = reps.len();
                reps.push(a);
            }
        }
    }
    let table = reps.iter().map(|&r| reps.iter().map(|&s| projection[c.op(r, s)]).collect()).collect();
    Ok(Retraction { quotient: CycleSet::new(table)?, projection })
}

pub fn retract(c: &CycleSet) -> Result<CycleSet> {
    Ok(retraction(c)?.quotient)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MpLevel {
    Level(usize),
    NotMultipermutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MpReport {
    /// |Ret⁰|, |Ret¹|, … until size 1 or stabilization
    pub levels: Vec<usize>,
    pub level: MpLevel,
}

pub fn mp_level(c: &CycleSet) -> Result<MpReport> {
    let mut cur = c.clone();
    let mut levels = vec![cur.size()];
    loop {
        if cur.size() == 1 {
            return Ok(MpReport { level: MpLevel::Level(levels.len() - 1), levels });
        }
        let next = retract(&cur)?;
        if next.size() == cur.size() {
            return Ok(MpReport { levels, level: MpLevel::NotMultipermutation });
        }
        levels.push(next.size());
        cur = next;
    }
}

/// A ×_f C over Z/2 with f(x,y) = [x ≠ y].
pub fn doubling_descriptor(c: &CycleSet) -> Result<ExtensionDescriptor> {
    if !is_square_free(c) {
        return Err(Error::NotSquareFree);
    }
    let z2 = FiniteAbelianGroup::cyclic(2);
    extend(c, &Cochain2::delta(c.size(), &z2, 1, 0))
}

pub fn doubling_extension(c: &CycleSet) -> Result<CycleSet> {
    Ok(doubling_descriptor(c)?.total)
}

/// Every fiber of the extension lies in one ≈-class of its total set.
pub fn fibers_in_retraction_classes(e: &ExtensionDescriptor) -> Result<bool> {
    let r = retraction(&e.total)?;
    let n = e.base.size();
    Ok((0..e.total.size()).all(|t| r.projection[t] == r.projection[e.projection[t] % n]))
}

pub const CANONICAL_LIMIT: usize = 8;

struct Canon<'a> {
    n: usize,
    t: &'a Table,
    best: Option<Vec<usize>>,
    best_pi: Vec<usize>,
    // bumped on every improvement; a path that produced the new best now equals it
    version: u64,
}

const NONE: usize = usize::MAX;

impl Canon<'_> {
    fn go(&mut self, pi: &mut [usize], inv: &mut [usize], m: usize, pos: usize, cur: &mut Vec<usize>, better: bool) {
        let n = self.n;
        if pos == n * n {
            self.best = Some(cur.clone());
            self.best_pi = pi.to_vec();
            self.version += 1;
            return;
        }
        let (r, c) = (pos / n, pos % n);
        if r.max(c) >= m {
            // the next column label is fresh: branch on its preimage
            let mut better = better;
            for u in 0..n {
                if pi[u] == NONE {
                    pi[u] = m;
                    inv[m] = u;
                    let v0 = self.version;
                    self.go(pi, inv, m + 1, pos, cur, better);
                    if self.version != v0 {
                        better = false;
                    }
                    pi[u] = NONE;
                    inv[m] = NONE;
                }
            }
            return;
        }
        let v = self.t[inv[r]][inv[c]];
        let fresh = pi[v] == NONE;
        let (label, m2) = if fresh { (m, m + 1) } else { (pi[v], m) };
        let mut better = better;
        if let (false, Some(best)) = (better, &self.best) {
            if label > best[pos] {
                return;
            }
            better = label < best[pos];
        }
        if fresh {
            pi[v] = m;
            inv[m] = v;
        }
        cur.push(label);
        self.go(pi, inv, m2, pos + 1, cur, better);
        cur.pop();
        if fresh {
            pi[v] = NONE;
            inv[m] = NONE;
        }
    }
}

/// The lex-minimal relabeled table and a relabeling π (element ↦ label) producing it.
pub fn canonical_labeling(c: &CycleSet) -> Result<(CycleSet, Vec<usize>)> {
    let n = c.size();
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLarge(format!("canonical form needs n ≤ {CANONICAL_LIMIT}, got {n}")));
    }
    let mut canon = Canon { n, t: c.table(), best: None, best_pi: Vec::new(), version: 0 };
    canon.go(&mut vec![NONE; n], &mut vec![NONE; n], 0, 0, &mut Vec::with_capacity(n * n), false);
    let pi = canon.best_pi;
    Ok((c.relabel(&pi), pi))
}

pub fn canonical_form(c: &CycleSet) -> Result<CycleSet> {
    Ok(canonical_labeling(c)?.0)
}

fn cycle_type(row: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; row.len()];
    let mut out = Vec::new();
    for s in 0..row.len() {
        if !seen[s] {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = row[x];
                len += 1;
            }
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// An isomorphism a → b (element map), by closure-propagating backtracking.
pub fn find_isomorphism(a: &CycleSet, b: &CycleSet) -> Option<Vec<usize>> {
    let n = a.size();
    if b.size() != n {
        return None;
    }
    let sig = |c: &CycleSet, x: usize| {
        let col: Vec<usize> = (0..n).map(|y| c.op(y, x)).collect();
        let mut col_counts = vec![0; n];
        for v in col {
            col_counts[v] += 1;
        }
        col_counts.sort_unstable();
        (cycle_type(&c.table()[x]), c.op(x, x) == x, col_counts)
    };
    let sa: Vec<_> = (0..n).map(|x| sig(a, x)).collect();
    let sb: Vec<_> = (0..n).map(|x| sig(b, x)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return None;
    }
    fn extend_map(a: &CycleSet, b: &CycleSet, pi: &mut Vec<usize>, inv: &mut Vec<usize>, x: usize, y: usize) -> bool {
        let n = a.size();
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            if pi[x] != NONE || inv[y] != NONE {
                if pi[x] != y || inv[y] != x {
                    return false;
                }
                continue;
            }
            pi[x] = y;
            inv[y] = x;
            for u in 0..n {
                if pi[u] != NONE {
                    let pu = pi[u];
                    stack.push((a.op(x, u), b.op(y, pu)));
                    stack.push((a.op(u, x), b.op(pu, y)));
                }
            }
        }
        true
    }
    fn go<S: PartialEq>(a: &CycleSet, b: &CycleSet, sa: &[S], sb: &[S], pi: &mut Vec<usize>, inv: &mut Vec<usize>) -> bool {
        let n = a.size();
        let Some(x) = (0..n).find(|&x| pi[x] == NONE) else {
            return true;
        };
        for y in 0..n {
            if inv[y] == NONE && sa[x] == sb[y] {
                let (sp, si) = (pi.clone(), inv.clone());
                if extend_map(a, b, pi, inv, x, y) && go(a, b, sa, sb, pi, inv) {
                    return true;
                }
                *pi = sp;
                *inv = si;
            }
        }
        false
    }
    let mut pi = vec![NONE; n];
    let mut inv = vec![NONE; n];
    go(a, b, &sa, &sb, &mut pi, &mut inv).then_some(pi)
}

pub fn is_isomorphic(a: &CycleSet, b: &CycleSet) -> bool {
    find_isomorphism(a, b).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub size: usize,
    pub square_free: bool,
    pub up_to_iso: bool,
    /// Search-node limit.
    pub budget: u64,
}

impl EnumerationConfig {
    pub fn new(size: usize) -> Self {
        EnumerationConfig { size, square_free: false, up_to_iso: false, budget: DEFAULT_BUDGET }
    }
}

pub const DEFAULT_BUDGET: u64 = 200_000_000;
pub const MAX_ENUM_SIZE: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub sets: Vec<CycleSet>,
    pub complete: bool,
    pub nodes: u64,
}

const UNSET: u8 = u8::MAX;

#[derive(Clone)]
struct Partial {
    n: usize,
    t: Vec<u8>,
    used: Vec<u32>,
}

impl Partial {
    #[inline]
    fn get(&self, r: usize, c: usize) -> u8 {
        self.t[r * self.n + c]
    }

    fn assign(&mut self, r: usize, c: usize, v: u8) -> bool {
        let cell = &mut self.t[r * self.n + c];
        if *cell != UNSET {
            return *cell == v;
        }
        if self.used[r] & (1 << v) != 0 {
            return false;
        }
        *cell = v;
        self.used[r] |= 1 << v;
        true
    }

    /// Forces entries implied by the cycle property and by single gaps in a row.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        loop {
            let mut changed = false;
            for x in 0..n {
                for y in x + 1..n {
                    let (xy, yx) = (self.get(x, y), self.get(y, x));
                    if xy == UNSET || yx == UNSET {
                        continue;
                    }
                    for z in 0..n {
                        let (xz, yz) = (self.get(x, z), self.get(y, z));
                        if xz == UNSET || yz == UNSET {
                            continue;
                        }
                        let (l, r) = (self.get(xy as usize, xz as usize), self.get(yx as usize, yz as usize));
                        match (l == UNSET, r == UNSET) {
                            (false, false) if l != r => return false,
                            (false, true) => {
                                if !self.assign(yx as usize, yz as usize, l) {
                                    return false;
                                }
                                changed = true;
                            }
                            (true, false) => {
                                if !self.assign(xy as usize, xz as usize, r) {
                                    return false;
                                }
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
            }
            let full = (1u32 << n) - 1;
            for r in 0..n {
                if self.used[r].count_ones() as usize == n - 1 {
                    let v = (full & !self.used[r]).trailing_zeros() as u8;
                    let c = (0..n).find(|&c| self.get(r, c) == UNSET).unwrap();
                    self.assign(r, c, v);
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn row(&self, r: usize) -> Option<Vec<usize>> {
        let row = &self.t[r * self.n..(r + 1) * self.n];
        row.iter().all(|&v| v != UNSET).then(|| row.iter().map(|&v| v as usize).collect())
    }
}

/// Partitions of `m` in descending-part form.
fn partitions(m: usize, max: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in (1..=m.min(max)).rev() {
        for mut rest in partitions(m - p, p) {
            rest.insert(0, p);
            out.push(rest);
        }
    }
    out
}

struct Search<'a> {
    cfg: EnumerationConfig,
    /// Maximal cycle type allowed for any row (symmetry breaking), if any.
    max_type: Option<Vec<usize>>,
    nodes: &'a AtomicU64,
    stop: &'a AtomicBool,
}

impl Search<'_> {
    fn rows_ok(&self, p: &Partial) -> bool {
        match &self.max_type {
            None => true,
            Some(mt) => (0..p.n).all(|r| p.row(r).is_none_or(|row| cycle_type(&row) <= *mt)),
        }
    }

    fn dfs(&self, p: Partial, visit: &(dyn Fn(CycleSet) -> bool + Sync)) {
        if self.stop.load(Ordering::Relaxed) {
            return;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.cfg.budget {
            self.stop.store(true, Ordering::Relaxed);
            return;
        }
        let n = p.n;
        let Some(pos) = p.t.iter().position(|&v| v == UNSET) else {
            let table: Table = (0..n).map(|r| p.row(r).unwrap()).collect();
            if let Ok(c) = CycleSet::new(table) {
                if !visit(c) {
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
            return;
        };
        let (r, _) = (pos / n, pos % n);
        for v in 0..n as u8 {
            if p.used[r] & (1 << v) != 0 {
                continue;
            }
            let mut q = p.clone();
            if q.assign(r, pos % n, v) && q.propagate() && self.rows_ok(&q) {
                self.dfs(q, visit);
            }
        }
    }
}

/// Runs the search, calling `visit` on every complete table found (labeled,
/// or symmetry-reduced when square-free and up to isomorphism). `visit`
/// returns false to stop early.
pub fn search_cycle_sets(cfg: EnumerationConfig, visit: &(dyn Fn(CycleSet) -> bool + Sync)) -> Result<(bool, u64)> {
    let n = cfg.size;
    if n == 0 || n > MAX_ENUM_SIZE {
        return Err(Error::Range(format!("enumeration size must be in 1..={MAX_ENUM_SIZE}")));
    }
    if cfg.budget == 0 {
        return Err(Error::Range("budget must be positive".into()));
    }
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let blank = || {
        let mut p = Partial { n, t: vec![UNSET; n * n], used: vec![0; n] };
        if cfg.square_free {
            for x in 0..n {
                p.assign(x, x, x as u8);
            }
        }
        p
    };
    let seeds: Vec<(Partial, Option<Vec<usize>>)> = if cfg.square_free && cfg.up_to_iso {
        // row 0 in standard form with a cycle type maximal among all rows
        partitions(n - 1, n - 1)
            .into_iter()
            .filter_map(|lambda| {
                let mut p = blank();
                let mut start = 1;
                for &len in &lambda {
                    for i in 0..len {
                        let next = start + (i + 1) % len;
                        p.assign(0, start + i, next as u8);
                    }
                    start += len;
                }
                let mut full_type = lambda.clone();
                full_type.push(1);
                full_type.sort_unstable_by(|a, b| b.cmp(a));
                p.propagate().then_some((p, Some(full_type)))
            })
            .collect()
    } else {
        vec![(blank(), None)]
    };
    seeds.into_par_iter().for_each(|(p, max_type)| {
        let s = Search { cfg, max_type, nodes: &nodes, stop: &stop };
        if s.rows_ok(&p) && p.clone().propagate() {
            s.dfs(p, visit);
        }
    });
    let used = nodes.load(Ordering::Relaxed);
    Ok((used < cfg.budget, used))
}

/// Enumerates cycle sets; partial results are flagged incomplete when the budget runs out.
pub fn enumerate_partial(cfg: EnumerationConfig) -> Result<Enumeration> {
    let found = std::sync::Mutex::new(Vec::new());
    let (complete, nodes) = search_cycle_sets(cfg, &|c| {
        found.lock().unwrap().push(c);
        true
    })?;
    let mut sets = found.into_inner().unwrap();
    if cfg.up_to_iso {
        let canon: Vec<CycleSet> = sets.par_iter().map(canonical_form).collect::<Result<_>>()?;
        let mut seen = HashSet::new();
        sets = canon.into_iter().filter(|c| seen.insert(c.clone())).collect();
    }
    sets.sort_by(|a, b| a.table().cmp(b.table()));
    Ok(Enumeration { sets, complete, nodes })
}

pub fn enumerate_cycle_sets(cfg: EnumerationConfig) -> Result<Vec<CycleSet>> {
    let e = enumerate_partial(cfg)?;
    if !e.complete {
        return Err(Error::BudgetExceeded);
    }
    Ok(e.sets)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NmTable {
    /// (m, N_m) for m = 0..=max_m; None when no size in range reaches level m.
    pub entries: Vec<(usize, Option<usize>)>,
    pub largest_complete_size: usize,
    pub doubling_bound_holds: bool,
}

/// For each size up to `max_size`, the MP levels of square-free cycle sets;
/// records the least size reaching each level m ≤ max_m.
pub fn nm_table(max_m: usize, max_size: usize, budget: u64) -> Result<NmTable> {
    let mut best: Vec<Option<usize>> = vec![None; max_m + 1];
    let mut largest = 0;
    for n in 1..=max_size {
        if best.iter().all(|b| b.is_some()) {
            break;
        }
        let missing: Vec<usize> = (0..=max_m).filter(|&m| best[m].is_none()).collect();
        let hits = std::sync::Mutex::new(HashSet::new());
        let cfg = EnumerationConfig { size: n, square_free: true, up_to_iso: true, budget };
        let (complete, _) = search_cycle_sets(cfg, &|c| {
            if let Ok(MpReport { level: MpLevel::Level(m), .. }) = mp_level(&c) {
                let mut h = hits.lock().unwrap();
                h.insert(m);
                // stop as soon as every missing level is witnessed
                return !missing.iter().all(|m| h.contains(m));
            }
            true
        })?;
        for m in hits.into_inner().unwrap() {
            if m <= max_m && best[m].is_none() {
                best[m] = Some(n);
            }
        }
        let done = best.iter().all(|b| b.is_some());
        if !complete && !done {
            return Err(Error::BudgetExceeded);
        }
        largest = n;
    }
    let entries: Vec<(usize, Option<usize>)> = best.iter().copied().enumerate().collect();
    let doubling_bound_holds = entries
        .windows(2)
        .all(|w| match (w[0].1, w[1].1) {
            (Some(a), Some(b)) => a <= b && b <= 2 * a,
            _ => true,
        });
    Ok(NmTable { entries, largest_complete_size: largest, doubling_bound_holds })
}

/// Table-1 style rendering.
pub fn format_nm_table(t: &NmTable) -> String {
    let fmt = |v: Option<usize>| v.map_or("?".to_string(), |x| x.to_string());
    let ms: Vec<String> = t.entries.iter().map(|e| e.0.to_string()).collect();
    let ns: Vec<String> = t.entries.iter().map(|e| fmt(e.1)).collect();
    format!("m   | {}\nN_m | {}\n", ms.join(" "), ns.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shift2() -> CycleSet {
        CycleSet::new(vec![vec![1, 0], vec![1, 0]]).unwrap()
    }

    fn count(size: usize, square_free: bool, up_to_iso: bool) -> usize {
        enumerate_cycle_sets(EnumerationConfig { size, square_free, up_to_iso, budget: DEFAULT_BUDGET })
            .unwrap()
            .len()
    }

    // labeled cycle sets by brute force over all tables of row permutations
    fn brute_labeled(n: usize) -> Vec<CycleSet> {
        let perms: Vec<Vec<usize>> = crate::tuples(n, n).into_iter().filter(|p| is_permutation(p)).collect();
        crate::tuples(perms.len(), n)
            .into_iter()
            .filter_map(|rows| CycleSet::new(rows.iter().map(|&r| perms[r].clone()).collect()).ok())
            .collect()
    }

    #[test]
    fn square_free_examples() {
        assert!(is_square_free(&CycleSet::trivial(3)));
        assert!(!is_square_free(&shift2()) && is_nondegenerate(&shift2()));
    }

    #[test]
    fn retract_examples() {
        assert_eq!(retract(&shift2()).unwrap().size(), 1);
        assert_eq!(retract(&CycleSet::trivial(4)).unwrap().size(), 1);
        let d = doubling_extension(&CycleSet::trivial(2)).unwrap();
        assert!(is_isomorphic(&retract(&d).unwrap(), &CycleSet::trivial(2)));
        // degenerate cycle sets only exist for infinite carriers, so any finite one retracts
        assert!(brute_labeled(3).iter().all(|c| is_nondegenerate(c) && retract(c).is_ok()));
        let bad = CycleSet::new_unchecked(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(retract(&bad), Err(Error::Degenerate));
    }

    #[test]
    fn mp_examples() {
        assert_eq!(mp_level(&CycleSet::trivial(1)).unwrap().level, MpLevel::Level(0));
        let p = CycleSet::permutation(&[1, 2, 0]).unwrap();
        assert_eq!(mp_level(&p).unwrap().level, MpLevel::Level(1));
        let d = doubling_extension(&CycleSet::trivial(2)).unwrap();
        assert_eq!(mp_level(&d).unwrap(), MpReport { levels: vec![4, 2, 1], level: MpLevel::Level(2) });
    }

    #[test]
    fn doubling_tower() {
        let mut c = CycleSet::trivial(1);
        for m in 1..=5 {
            let next = doubling_extension(&c).unwrap();
            assert!(is_square_free(&next));
            assert_eq!(next.size(), 1 << m);
            assert_eq!(mp_level(&next).unwrap().level, MpLevel::Level(m));
            assert!(is_isomorphic(&retract(&next).unwrap(), &c));
            assert!(fibers_in_retraction_classes(&doubling_descriptor(&c).unwrap()).unwrap());
            c = next;
        }
        assert_eq!(doubling_extension(&shift2()), Err(Error::NotSquareFree));
    }

    #[test]
    fn canonical_examples() {
        let t = CycleSet::trivial(3);
        assert_eq!(canonical_form(&t).unwrap(), t);
        let s = shift2();
        assert_eq!(canonical_form(&s.relabel(&[1, 0])).unwrap(), canonical_form(&s).unwrap());
        let d = doubling_extension(&CycleSet::trivial(2)).unwrap();
        let c1 = canonical_form(&d).unwrap();
        assert_eq!(canonical_form(&c1).unwrap(), c1);
        assert_eq!(canonical_form(&d.relabel(&[2, 0, 3, 1])).unwrap(), c1);
        assert!(matches!(canonical_form(&CycleSet::trivial(9)), Err(Error::TooLarge(_))));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count(1, false, false), 1);
        assert_eq!(count(2, false, true), 2);
        assert_eq!(count(2, true, false), 1);
        for n in 1..=3 {
            assert_eq!(count(n, false, false), brute_labeled(n).len());
        }
        let sf: Vec<usize> = (1..=6).map(|n| count(n, true, true)).collect();
        assert_eq!(sf, vec![1, 1, 2, 5, 17, 68]);
        let all: Vec<usize> = (1..=5).map(|n| count(n, false, true)).collect();
        assert_eq!(all, vec![1, 2, 5, 23, 88]);
    }

    #[test]
    fn orbit_sum_matches_labeled_count() {
        for n in 1..=3 {
            let classes = count(n, false, true);
            let labeled = brute_labeled(n);
            let mut canon = std::collections::HashMap::new();
            for c in &labeled {
                *canon.entry(canonical_form(c).unwrap()).or_insert(0usize) += 1;
            }
            assert_eq!(canon.len(), classes);
            assert_eq!(canon.values().sum::<usize>(), labeled.len());
        }
    }

    #[test]
    fn budget() {
        let cfg = EnumerationConfig { size: 4, square_free: false, up_to_iso: false, budget: 3 };
        assert_eq!(enumerate_cycle_sets(cfg), Err(Error::BudgetExceeded));
        assert!(!enumerate_partial(cfg).unwrap().complete);
    }

    #[test]
    fn nm_prefix() {
        let t = nm_table(3, 6, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.entries, vec![(0, Some(1)), (1, Some(2)), (2, Some(3)), (3, Some(5))]);
        assert!(t.doubling_bound_holds);
    }

    #[test]
    fn classes_pairwise_non_isomorphic() {
        let cfg = EnumerationConfig { size: 6, square_free: true, up_to_iso: true, budget: DEFAULT_BUDGET };
        let sets = enumerate_cycle_sets(cfg).unwrap();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                assert!(!is_isomorphic(&sets[i], &sets[j]));
            }
        }
    }

    #[test]
    fn labeled_count_is_sum_of_orbits() {
        for (n, sf) in [(4, false), (5, true)] {
            let perms: Vec<Vec<usize>> = crate::tuples(n, n).into_iter().filter(|p| is_permutation(p)).collect();
            let classes = enumerate_cycle_sets(EnumerationConfig { size: n, square_free: sf, up_to_iso: true, budget: DEFAULT_BUDGET }).unwrap();
            let labeled = enumerate_cycle_sets(EnumerationConfig { size: n, square_free: sf, up_to_iso: false, budget: DEFAULT_BUDGET }).unwrap();
            let orbit_sum: usize = classes
                .iter()
                .map(|c| perms.len() / perms.iter().filter(|p| c.relabel(p) == *c).count())
                .sum();
            assert_eq!(orbit_sum, labeled.len());
        }
    }
}
