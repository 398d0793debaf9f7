//! Built-in fixture library: all cycle sets of size ≤ 3 up to isomorphism, the
//! racks R_3 and trivial, the group Z/2 and flips.

use crate::multipermutation::{enumerate_cycle_sets, EnumerationConfig};
use crate::structures::{BraidedSet, CycleSet, Shelf, ShelfVariant};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub braided: BraidedSet,
    /// Present for cycle-set braidings.
    pub cycle_set: Option<CycleSet>,
}

/// Cycle sets of size 1..=max_n up to isomorphism, named `cs{n}_{i}` in canonical order.
pub fn cycle_sets(max_n: usize) -> Vec<(String, CycleSet)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let cfg = EnumerationConfig { up_to_iso: true, ..EnumerationConfig::new(n) };
        let sets = enumerate_cycle_sets(cfg).expect("small enumeration fits the default budget");
        for (i, c) in sets.into_iter().enumerate() {
            out.push((format!("cs{n}_{i}"), c));
        }
    }
    out
}

pub fn r3() -> BraidedSet {
    BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Primal)
}

pub fn z2_group() -> BraidedSet {
    BraidedSet::from_group(&vec![vec![0, 1], vec![1, 0]], 0).expect("Z/2 is a group")
}

pub fn flip(n: usize) -> BraidedSet {
    BraidedSet::from_cycle_set(&CycleSet::trivial(n))
}

/// Every built-in braided set; all are left non-degenerate.
pub fn all() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = cycle_sets(3)
        .into_iter()
        .map(|(name, c)| Fixture { name, braided: BraidedSet::from_cycle_set(&c), cycle_set: Some(c) })
        .collect();
    let plain = |name: &str, braided: BraidedSet| Fixture { name: name.into(), braided, cycle_set: None };
    out.push(plain("rack_r3", r3()));
    out.push(plain("rack_r3_mirror", BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Mirror)));
    out.push(plain("rack_trivial3", BraidedSet::from_shelf(&Shelf::trivial(3), ShelfVariant::Primal)));
    out.push(plain("group_z2", z2_group()));
    out.push(plain("flip2", flip(2)));
    out.push(plain("flip3", flip(3)));
    out
}

pub fn by_name(name: &str) -> Option<Fixture> {
    all().into_iter().find(|f| f.name == name)
}

pub fn names() -> Vec<String> {
    all().into_iter().map(|f| f.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_shape() {
        assert_eq!(cycle_sets(3).len(), 8);
        let all = all();
        assert!(all.iter().all(|f| f.braided.is_left_nondegenerate() && f.braided.satisfies_ybe()));
        assert!(by_name("rack_r3").is_some() && by_name("nope").is_none());
        let mut names = names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), all.len());
    }
}
