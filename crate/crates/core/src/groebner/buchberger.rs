//! Buchberger's algorithm on polynomials stored as term vectors sorted
//! ascending under the active order (leading term last).

use std::cmp::Ordering;

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

pub(crate) type Terms<F> = Vec<(Monomial, F)>;

pub(crate) fn to_terms<F: Field>(p: &Polynomial<F>, ord: MonomialOrder) -> Terms<F> {
    let mut v: Terms<F> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    v.sort_by(|a, b| ord.compare(&a.0, &b.0));
    v
}

pub(crate) fn from_terms<F: Field>(nvars: usize, t: Terms<F>) -> Polynomial<F> {
    Polynomial::from_terms(nvars, t)
}

/// `a - c·m·b`, both inputs ascending.
fn sub_scaled<F: Field>(a: &Terms<F>, c: &F, m: &Monomial, b: &Terms<F>, ord: MonomialOrder) -> Terms<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.push(a[i].clone());
            i += 1;
            continue;
        }
        let bm = b[j].0.mul(m);
        if i == a.len() {
            out.push((bm, -(c.clone() * b[j].1.clone())));
            j += 1;
            continue;
        }
        match ord.compare(&a[i].0, &bm) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((bm, -(c.clone() * b[j].1.clone())));
                j += 1;
            }
            Ordering::Equal => {
                let s = a[i].1.clone() - c.clone() * b[j].1.clone();
                if !s.is_zero() {
                    out.push((bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn make_monic<F: Field>(t: &mut Terms<F>) {
    if let Some((_, lc)) = t.last() {
        if lc.is_one() {
            return;
        }
        let inv = lc.inv().expect("nonzero leading coefficient");
        for (_, c) in t.iter_mut() {
            *c = c.clone() * inv.clone();
        }
    }
}

/// Full reduction of `f` modulo `basis` (all monic). The remainder is monic
/// when `monic` is set.
pub(crate) fn reduce<F: Field>(f: Terms<F>, basis: &[Terms<F>], ord: MonomialOrder, monic: bool) -> Terms<F> {
    let mut p = f;
    let mut rem: Terms<F> = Vec::new();
    while let Some((m, c)) = p.last().cloned() {
        let divisor = basis
            .iter()
            .find_map(|g| g.last().and_then(|(lm, _)| lm.divide_into(&m)).map(|q| (g, q)));
        match divisor {
            Some((g, q)) => {
                let lc = &g.last().expect("nonzero").1;
                let factor = if lc.is_one() { c } else { c * lc.inv().expect("nonzero") };
                p = sub_scaled(&p, &factor, &q, g, ord);
            }
            None => {
                rem.push(p.pop().expect("nonempty"));
            }
        }
    }
    rem.reverse();
    if monic {
        make_monic(&mut rem);
    }
    rem
}

fn s_polynomial<F: Field>(f: &Terms<F>, g: &Terms<F>, ord: MonomialOrder) -> Terms<F> {
    let (lf, cf) = f.last().expect("nonzero");
    let (lg, cg) = g.last().expect("nonzero");
    let l = lf.lcm(lg);
    let mf = lf.divide_into(&l).expect("lcm");
    let mg = lg.divide_into(&l).expect("lcm");
    let inv_f = cf.inv().expect("nonzero");
    let scaled_f: Terms<F> = f.iter().map(|(m, c)| (m.mul(&mf), c.clone() * inv_f.clone())).collect();
    let inv_g = cg.inv().expect("nonzero");
    let mut s = sub_scaled(&scaled_f, &inv_g, &mg, g, ord);
    // leading terms cancel exactly
    debug_assert!(s
        .last()
        .map(|(m, _)| ord.compare(m, &l) == Ordering::Less)
        .unwrap_or(true));
    s.retain(|(_, c)| !c.is_zero());
    s
}

/// Reduced Gröbner basis of the given generators, sorted ascending by
/// leading monomial.
pub(crate) fn groebner<F: Field>(gens: &[Polynomial<F>], ord: MonomialOrder) -> Vec<Terms<F>> {
    let mut basis: Vec<Terms<F>> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let mut input: Vec<Terms<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| to_terms(g, ord)).collect();
    input.sort_by(|a, b| ord.compare(&a.last().unwrap().0, &b.last().unwrap().0));

    let add = |basis: &mut Vec<Terms<F>>, pairs: &mut Vec<(usize, usize)>, h: Terms<F>| {
        let k = basis.len();
        basis.push(h);
        for i in 0..k {
            pairs.push((i, k));
        }
    };

    for g in input {
        let h = reduce(g, &basis, ord, true);
        if !h.is_empty() {
            if h.last().unwrap().0.is_one() {
                return vec![h];
            }
            add(&mut basis, &mut pairs, h);
        }
    }

    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = lcm_of(&basis, a);
                let lb = lcm_of(&basis, b);
                ord.compare(&la, &lb)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(idx);
        let li = &basis[i].last().unwrap().0;
        let lj = &basis[j].last().unwrap().0;
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].last().unwrap().0.divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let h = reduce(s, &basis, ord, true);
        if !h.is_empty() {
            if h.last().unwrap().0.is_one() {
                return vec![h];
            }
            add(&mut basis, &mut pairs, h);
        }
    }

    // minimize
    let mut keep: Vec<Terms<F>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = &g.last().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = &h.last().unwrap().0;
            j != i && lh.divides(lm) && (lh != lm || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // interreduce
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Terms<F>> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = keep[i].clone();
        let lead = g.pop().unwrap();
        let mut tail = reduce(g, &others, ord, false);
        tail.push(lead);
        make_monic(&mut tail);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| ord.compare(&a.last().unwrap().0, &b.last().unwrap().0));
    reduced
}

fn lcm_of<F>(basis: &[Terms<F>], p: &(usize, usize)) -> Monomial {
    basis[p.0].last().unwrap().0.lcm(&basis[p.1].last().unwrap().0)
}

/// S-polynomial of two polynomials (for criterion checks in tests).
pub(crate) fn s_poly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, ord: MonomialOrder) -> Polynomial<F> {
    from_terms(f.nvars(), s_polynomial(&to_terms(f, ord), &to_terms(g, ord), ord))
}
