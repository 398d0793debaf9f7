//! The guitar map J on tuples, its inverse, the χ maps and the identities
//! relating σ to the braiding of its associated shelf.
//!
//! Positions `i` in this module's API are 1-based, as in σ_i and J_i.

use crate::structures::{double_t, toss, BraidedSet, Shelf};
use crate::{tuples, CheckReport, Error, Result};

/// J_i(x̄) = x_i^{x_{i+1}⋯x_k}, the right action folded left to right.
pub fn guitar(b: &BraidedSet, xs: &[usize]) -> Vec<usize> {
    (0..xs.len())
        .map(|i| xs[i + 1..].iter().fold(xs[i], |acc, &c| b.right(acc, c)))
        .collect()
}

/// J⁻¹, built back to front with inverse right translations.
pub fn guitar_inverse(b: &BraidedSet, ys: &[usize]) -> Result<Vec<usize>> {
    b.require_lnd()?;
    let k = ys.len();
    let mut xs = vec![0; k];
    for i in (0..k).rev() {
        xs[i] = xs[i + 1..].iter().rev().fold(ys[i], |acc, &c| b.lolli(c, acc));
    }
    Ok(xs)
}

/// ā^c for a single element c: c crosses a_k first, then a_{k−1}, and so on.
pub fn tuple_right_action(b: &BraidedSet, a: &[usize], c: usize) -> Vec<usize> {
    let mut out = a.to_vec();
    let mut c = c;
    for x in out.iter_mut().rev() {
        let (l, r) = b.sigma(*x, c);
        *x = r;
        c = l;
    }
    out
}

/// ā^{b̄}, the adjoint right action of T(X) on itself.
pub fn tuple_action(b: &BraidedSet, a: &[usize], bs: &[usize]) -> Vec<usize> {
    bs.iter().fold(a.to_vec(), |acc, &c| tuple_right_action(b, &acc, c))
}

/// ^{ā}c, the left action of a tuple on one element.
pub fn tuple_left_action(b: &BraidedSet, a: &[usize], c: usize) -> usize {
    a.iter().rev().fold(c, |acc, &x| b.left(x, acc))
}

/// a^{b̄} = (…(a^{b_1})…)^{b_m}
pub fn element_action(b: &BraidedSet, a: usize, bs: &[usize]) -> usize {
    bs.iter().fold(a, |acc, &c| b.right(acc, c))
}

/// ā ↷ b̄, componentwise a_i^{b̄}.
pub fn componentwise_action(b: &BraidedSet, a: &[usize], bs: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| element_action(b, x, bs)).collect()
}

/// Applies σ at 1-based positions (i, i+1).
pub fn sigma_at(b: &BraidedSet, xs: &mut [usize], i: usize) {
    let (l, r) = b.sigma(xs[i - 1], xs[i]);
    xs[i - 1] = l;
    xs[i] = r;
}

/// χ_i(ȳ) = J⁻¹_1((y_i◁y_{i−1})⋯◁y_1, y_1, …, ŷ_i, …, y_k).
pub fn chi_with(b: &BraidedSet, shelf: &Shelf, i: usize, ys: &[usize]) -> Result<usize> {
    if i == 0 || i > ys.len() {
        return Err(Error::IndexOutOfRange(i));
    }
    let head = ys[..i - 1].iter().rev().fold(ys[i - 1], |acc, &y| shelf.op(acc, y));
    let mut t = Vec::with_capacity(ys.len());
    t.push(head);
    t.extend_from_slice(&ys[..i - 1]);
    t.extend_from_slice(&ys[i..]);
    Ok(guitar_inverse(b, &t)?[0])
}

pub fn chi(b: &BraidedSet, i: usize, ys: &[usize]) -> Result<usize> {
    let shelf = b.associated_shelf()?;
    chi_with(b, &shelf, i, ys)
}

/// χ'_i(ȳ) = ^{x_1⋯x_{i−1}}x_i with x̄ = J⁻¹(ȳ).
pub fn chi_prime(b: &BraidedSet, i: usize, ys: &[usize]) -> Result<usize> {
    if i == 0 || i > ys.len() {
        return Err(Error::IndexOutOfRange(i));
    }
    let xs = guitar_inverse(b, ys)?;
    Ok(tuple_left_action(b, &xs[..i - 1], xs[i - 1]))
}

/// J∘σ_i = σ'_i∘J on all tuples of length ≤ max_k, with σ'(a,b) = (b◁a, a).
pub fn check_entwine(b: &BraidedSet, max_k: usize) -> Result<CheckReport> {
    let shelf = b.associated_shelf()?;
    let mut rep = CheckReport::new();
    for k in 2..=max_k {
        for xs in tuples(b.size(), k) {
            let j = guitar(b, &xs);
            for i in 1..k {
                let mut lhs = xs.clone();
                sigma_at(b, &mut lhs, i);
                let lhs = guitar(b, &lhs);
                let mut rhs = j.clone();
                let (p, q) = (rhs[i - 1], rhs[i]);
                rhs[i - 1] = shelf.op(q, p);
                rhs[i] = p;
                rep.record(lhs == rhs, || format!("J sigma_{i} != sigma'_{i} J on {xs:?}"));
            }
        }
    }
    Ok(rep)
}

/// J(āb̄) = (J(ā)↷b̄)J(b̄) and J(ā^{b̄}) = J(ā)↷b̄.
pub fn check_guitar_cocycle(b: &BraidedSet, a: &[usize], bs: &[usize]) -> bool {
    let ja = guitar(b, a);
    let moved = componentwise_action(b, &ja, bs);
    let mut concat = a.to_vec();
    concat.extend_from_slice(bs);
    let mut rhs = moved.clone();
    rhs.extend(guitar(b, bs));
    guitar(b, &concat) == rhs && guitar(b, &tuple_action(b, a, bs)) == moved
}

/// Exhaustive [`check_guitar_cocycle`] over all pairs of tuples with lengths ≤ max_len.
pub fn check_guitar_cocycle_all(b: &BraidedSet, max_len: usize) -> CheckReport {
    let mut rep = CheckReport::new();
    let all: Vec<Vec<usize>> = (0..=max_len).flat_map(|k| tuples(b.size(), k)).collect();
    for a in &all {
        for c in &all {
            rep.record(check_guitar_cocycle(b, a, c), || format!("cocycle fails on {a:?}, {c:?}"));
        }
    }
    rep
}

/// Inverse-pair identities of K∘J on the double, and the cancellation of
/// inverse pairs in the adjoint action, for tuples of length ≤ 2.
pub fn barj_identities(b: &BraidedSet) -> Result<CheckReport> {
    let d = b.double()?;
    let n = b.size();
    let t = b
        .t_map()
        .ok_or_else(|| Error::PreconditionFailed("braided set is not weakly RI-compatible".into()))?;
    let tbar = double_t(&t);
    let dr = d.classify();
    let mut rep = CheckReport::new();
    rep.record(dr.t_map.as_deref() == Some(&tbar[..]), || "t of the double differs from t̄".into());
    for a in 0..n {
        let (p, m) = (a, n + a);
        let kj = toss(&guitar(&d, &[p, m]), &t);
        rep.record(kj == vec![t[a], n + t[a]], || format!("KJ(a+,a-) fails at a={a}"));
        let kj = toss(&guitar(&d, &[m, p]), &t);
        rep.record(kj == vec![m, p], || format!("KJ(a-,a+) fails at a={a}"));
    }
    let all: Vec<Vec<usize>> = (0..=2).flat_map(|k| tuples(2 * n, k)).collect();
    for x in &all {
        for c in 0..n {
            for pair in [[c, n + c], [n + c, c]] {
                let y = tuple_action(&d, x, &pair);
                rep.record(&y == x, || format!("action of {pair:?} moves {x:?}"));
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{CycleSet, ShelfVariant};

    fn r3() -> BraidedSet {
        BraidedSet::from_shelf(&Shelf::dihedral(3), ShelfVariant::Primal)
    }

    fn shift2() -> BraidedSet {
        BraidedSet::from_cycle_set(&CycleSet::new(vec![vec![1, 0], vec![1, 0]]).unwrap())
    }

    #[test]
    fn guitar_examples() {
        let flip = BraidedSet::from_cycle_set(&CycleSet::trivial(3));
        assert_eq!(guitar(&flip, &[2, 0, 1]), vec![2, 0, 1]);
        assert_eq!(guitar(&shift2(), &[0, 0]), vec![1, 0]);
        assert_eq!(guitar(&r3(), &[0, 1]), vec![2, 1]);
        assert_eq!(guitar(&r3(), &[]), Vec::<usize>::new());
        assert_eq!(guitar_inverse(&shift2(), &[1, 0]).unwrap(), vec![0, 0]);
    }

    #[test]
    fn guitar_round_trip_r3() {
        let b = r3();
        for k in 0..=4 {
            for xs in tuples(3, k) {
                assert_eq!(guitar_inverse(&b, &guitar(&b, &xs)).unwrap(), xs);
                assert_eq!(guitar(&b, &guitar_inverse(&b, &xs).unwrap()), xs);
            }
        }
    }

    #[test]
    fn chi_examples() {
        let b = r3();
        let sh = b.associated_shelf().unwrap();
        for ys in tuples(3, 3) {
            assert_eq!(chi(&b, 1, &ys).unwrap(), guitar_inverse(&b, &ys).unwrap()[0]);
            // shelf braiding: χ_i(ȳ) = (⋯(y_i ◁̃ y_{i+1})⋯) ◁̃ y_k, and ◁̃ = ◁ for R_3
            for i in 1..=3 {
                let expect = ys[i..].iter().fold(ys[i - 1], |acc, &y| sh.op(acc, y));
                assert_eq!(chi(&b, i, &ys).unwrap(), expect);
                assert_eq!(chi_prime(&b, i, &ys).unwrap(), expect);
            }
        }
        let s = shift2();
        for ys in tuples(2, 3) {
            for i in 1..=3 {
                let mut t = vec![ys[i - 1]];
                t.extend_from_slice(&ys[..i - 1]);
                t.extend_from_slice(&ys[i..]);
                assert_eq!(chi(&s, i, &ys).unwrap(), guitar_inverse(&s, &t).unwrap()[0]);
            }
        }
        assert_eq!(chi(&s, 0, &[0]), Err(Error::IndexOutOfRange(0)));
        assert_eq!(chi(&s, 2, &[0]), Err(Error::IndexOutOfRange(2)));
    }

    #[test]
    fn entwine_and_cocycle() {
        assert!(check_entwine(&r3(), 3).unwrap().passed);
        assert!(check_entwine(&shift2(), 4).unwrap().passed);
        assert!(check_guitar_cocycle_all(&r3(), 2).passed);
        assert!(check_guitar_cocycle(&r3(), &[0, 2], &[]));
    }

    #[test]
    fn barj_examples() {
        assert!(barj_identities(&r3()).unwrap().passed);
        let flip1 = BraidedSet::from_cycle_set(&CycleSet::trivial(1));
        assert!(barj_identities(&flip1).unwrap().passed);
        let triv = BraidedSet::from_shelf(&Shelf::trivial(2), ShelfVariant::Primal);
        assert!(barj_identities(&triv).unwrap().passed);
    }
}
