//! Named verification suites over the built-in fixture library.

use crate::complexes::{conjugate_by_guitar, split, split_homology, AlphaBeta, BoundaryModel, Side, TEST_PAIRS};
use crate::extensions::{
    count_extension_classes, fun_word_relation_check, is_star_2cocycle, nu_relation_check, omega_coboundary_check,
    Cochain2,
};
use crate::fixtures::{self, Fixture};
use crate::guitar::{barj_identities, check_entwine, check_guitar_cocycle_all, guitar, guitar_inverse};
use crate::homology::{cohomology_groups, homology_all, FiniteAbelianGroup};
use crate::multipermutation::{is_square_free, nm_table, DEFAULT_BUDGET};
use crate::structures::{BraidedSet, LeftModule, RightModule};
use crate::{tuples, CheckReport, Result};
use serde::{Deserialize, Serialize};

pub const SUITE_NAMES: [&str; 6] = ["bridge", "ext-h2", "guitar", "homequiv", "nm", "splitting"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.into(), passed: true, checks: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.passed &= passed;
        self.checks.push(SuiteCheck { name: name.into(), passed, detail });
    }

    fn push_report(&mut self, name: impl Into<String>, r: Result<CheckReport>) {
        match r {
            Ok(r) => self.push(name, r.passed, r.failure),
            Err(e) => self.push(name, false, Some(e.to_string())),
        }
    }
}

pub fn run(name: &str) -> Option<SuiteReport> {
    Some(match name {
        "guitar" => guitar_suite(),
        "homequiv" => homequiv_suite(),
        "splitting" => splitting_suite(),
        "ext-h2" => ext_h2_suite(),
        "bridge" => bridge_suite(),
        "nm" => nm_suite(),
        _ => return None,
    })
}

fn ri_invertible(b: &BraidedSet) -> bool {
    b.is_invertible() && b.is_left_nondegenerate() && b.is_right_nondegenerate() && b.t_map().is_some()
}

fn guitar_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("guitar");
    for Fixture { name, braided: b, .. } in fixtures::all() {
        let mut round = CheckReport::new();
        for k in 0..=3 {
            for xs in tuples(b.size(), k) {
                let back = guitar_inverse(&b, &guitar(&b, &xs));
                round.record(back.as_ref() == Ok(&xs), || format!("J⁻¹J != Id on {xs:?}"));
            }
        }
        rep.push(format!("{name}: J round trip"), round.passed, round.failure);
        rep.push_report(format!("{name}: entwining"), check_entwine(&b, 4));
        let c = check_guitar_cocycle_all(&b, 2);
        rep.push(format!("{name}: cocycle identities"), c.passed, c.failure);
        if ri_invertible(&b) {
            rep.push_report(format!("{name}: double and toss identities"), barj_identities(&b));
        }
    }
    rep
}

fn coefficient_pairs(b: &BraidedSet) -> Vec<(&'static str, RightModule, LeftModule)> {
    let n = b.size();
    vec![
        ("trivial", RightModule::trivial(n), LeftModule::trivial(n)),
        ("adjoint", RightModule::adjoint(b), LeftModule::adjoint(b)),
    ]
}

fn homequiv_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("homequiv");
    for Fixture { name, braided: b, .. } in fixtures::all() {
        for (label, m, n) in coefficient_pairs(&b) {
            rep.push_report(format!("{name}/{label}: J conjugates the faces"), conjugate_by_guitar(&b, &m, &n, 3));
        }
        let n = b.size();
        let (m, q) = (RightModule::trivial(n), LeftModule::trivial(n));
        let homs = BoundaryModel::braided(&b, &m, &q, Side::Left, Side::Right)
            .and_then(|br| BoundaryModel::birack(&b, &m, &q).map(|bi| (br, bi)))
            .and_then(|(br, bi)| {
                let h1 = homology_all(&br.chain_complex(3, AlphaBeta::STANDARD))?;
                let h2 = homology_all(&bi.chain_complex(3, AlphaBeta::STANDARD))?;
                Ok(h1 == h2)
            });
        match homs {
            Ok(same) => rep.push(format!("{name}: equal homology in degrees ≤ 2"), same, None),
            Err(e) => rep.push(format!("{name}: equal homology in degrees ≤ 2"), false, Some(e.to_string())),
        }
    }
    rep
}

/// R_3 with coefficient degeneracies and every square-free cycle set of size ≤ 3
/// with both kinds of degeneracies.
pub fn splitting_models() -> Vec<(String, BoundaryModel)> {
    let mut out = Vec::new();
    let r3 = fixtures::r3();
    let model = |b: &BraidedSet| BoundaryModel::birack(b, &RightModule::trivial(b.size()), &LeftModule::trivial(b.size()));
    if let Ok(m) = model(&r3).and_then(|m| m.with_coefficient_degeneracies()) {
        out.push(("rack_r3/coefficient".into(), m));
    }
    for (name, c) in fixtures::cycle_sets(3) {
        if !is_square_free(&c) {
            continue;
        }
        let b = BraidedSet::from_cycle_set(&c);
        if let Ok(m) = model(&b).and_then(|m| m.with_coefficient_degeneracies()) {
            out.push((format!("{name}/coefficient"), m));
        }
        if let Ok(m) = model(&b).and_then(|m| m.with_plain_degeneracies()) {
            out.push((format!("{name}/plain"), m));
        }
    }
    out
}

fn splitting_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("splitting");
    for (name, model) in splitting_models() {
        for k in 1..=3 {
            match split(&model, k, &TEST_PAIRS) {
                Ok(c) => rep.push(format!("{name}: split in degree {k}"), c.passed(), (!c.passed()).then(|| format!("{c:?}"))),
                Err(e) => rep.push(format!("{name}: split in degree {k}"), false, Some(e.to_string())),
            }
        }
        for ab in TEST_PAIRS {
            let label = format!("{name}: homology additivity for ({}, {})", ab.alpha, ab.beta);
            match split_homology(&model, 3, ab) {
                Ok(h) => rep.push(label, h.additive(), None),
                Err(e) => rep.push(label, false, Some(e.to_string())),
            }
        }
    }
    rep
}

fn ext_h2_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("ext-h2");
    let a = FiniteAbelianGroup::cyclic(2);
    for (name, c) in fixtures::cycle_sets(3) {
        let r = count_extension_classes(&c, &a).and_then(|k| Ok((k, cohomology_groups(&c, 2, &a)?.order())));
        match r {
            Ok((k, h)) => rep.push(format!("{name}: classes = |H²|"), k as u128 == h, Some(format!("{k} vs {h}"))),
            Err(e) => rep.push(format!("{name}: classes = |H²|"), false, Some(e.to_string())),
        }
    }
    rep
}

fn bridge_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("bridge");
    let a = FiniteAbelianGroup::cyclic(2);
    for Fixture { name, braided: b, .. } in fixtures::all() {
        let n = b.size();
        let mut eq = CheckReport::new();
        for i in 0..(1u128 << (n * n)) {
            let f = Cochain2::from_index(n, &a, i);
            let (l, r) = (nu_relation_check(&b, &f), is_star_2cocycle(&b, &f));
            eq.record(l.is_ok() && l == r, || format!("ν relation and star condition differ on {f:?}"));
        }
        rep.push(format!("{name}: ν-relation set = star 2-cocycle set"), eq.passed, eq.failure);
        let mut om = CheckReport::new();
        for e in 0..n {
            let gamma: Vec<usize> = (0..n).map(|v| usize::from(v == e)).collect();
            om.record(omega_coboundary_check(&b, &a, &gamma) == Ok(true), || format!("ω check fails on δ_{e}"));
        }
        rep.push(format!("{name}: ω(∂⁰γ) = ∂¹⋆γ"), om.passed, om.failure);
        rep.push_report(format!("{name}: word relation on Fun(X, A)"), fun_word_relation_check(&b));
    }
    rep
}

fn nm_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("nm");
    match nm_table(4, 6, DEFAULT_BUDGET) {
        Ok(t) => {
            let got: Vec<Option<usize>> = t.entries.iter().map(|e| e.1).collect();
            let want = [1, 2, 3, 5, 6].map(Some).to_vec();
            rep.push("N_0..N_4 = 1 2 3 5 6", got == want, Some(format!("{got:?}")));
            rep.push("N_{m+1} ≤ 2 N_m", t.doubling_bound_holds, None);
        }
        Err(e) => rep.push("N_0..N_4 = 1 2 3 5 6", false, Some(e.to_string())),
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        for name in SUITE_NAMES {
            let r = run(name).unwrap();
            let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
            assert!(r.passed, "{name}: {failed:?}");
        }
        assert!(run("nope").is_none());
    }
}
