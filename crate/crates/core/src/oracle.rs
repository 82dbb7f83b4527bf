//! Slow, independent baselines for testing: a Macaulay matrix built from
//! every product `g·u` and solved by a separate elimination routine, a
//! criterion-free Buchberger algorithm for membership, and seeded random
//! ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dualspace::{DiffOperator, DualBasis, LocalPoint};
use crate::field::{Field, Rational};
use crate::groebner::Ideal;
use crate::monomial::{monomials_up_to, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::{Error, QIdeal, QPoly, Result};

/// Kernel basis by plain Gauss-Jordan elimination.
fn kernel<K: Field>(mut a: Vec<Vec<K>>, ncols: usize) -> Vec<Vec<K>> {
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&r| a[r][col] != K::zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inv().expect("pivot");
        a[row] = a[row].iter().map(|x| x.clone() * inv.clone()).collect();
        for r in 0..a.len() {
            if r != row && a[r][col] != K::zero() {
                let f = a[r][col].clone();
                let pr = a[row].clone();
                for (x, y) in a[r].iter_mut().zip(pr) {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    (0..ncols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![K::zero(); ncols];
            v[free] = K::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

/// `D^(d)_m[I]` from the full Macaulay matrix: every generator times every
/// monomial of degree at most `d`, every `∂`-monomial of degree at most `d`,
/// entries by repeated differentiation and reduction.
pub fn brute_dual<F: Field, P: LocalPoint<F>>(ideal: &Ideal<F>, point: &P, d: u32) -> Result<DualBasis<P::Kappa>> {
    let n = ideal.nvars();
    if n != point.nvars() {
        return Err(Error::RingMismatch {
            left: n,
            right: point.nvars(),
        });
    }
    let columns = monomials_up_to(n, d);
    let mut rows = Vec::new();
    for g in ideal.gens() {
        for u in monomials_up_to(n, d) {
            let h = g * &Polynomial::term(n, u, F::one());
            rows.push(
                columns
                    .iter()
                    .map(|a| {
                        let mut dh = h.clone();
                        for (i, &e) in a.padded(n).iter().enumerate() {
                            for _ in 0..e {
                                dh = dh.derivative(i);
                            }
                        }
                        point.reduce(&dh)
                    })
                    .collect(),
            );
        }
    }
    let ops: Vec<DiffOperator<P::Kappa>> = kernel(rows, columns.len())
        .into_iter()
        .map(|v| DiffOperator::from_vector(n, &columns, &v))
        .collect();
    Ok(DualBasis::from_operators(n, d, &ops))
}

/// A Gröbner basis from Buchberger's algorithm without pair criteria or
/// interreduction, kept for membership tests.
#[derive(Clone, Debug)]
pub struct BruteBasis {
    order: MonomialOrder,
    basis: Vec<QPoly>,
}

impl BruteBasis {
    pub fn new(ideal: &QIdeal, order: MonomialOrder) -> Self {
        let mut basis: Vec<QPoly> = Vec::new();
        for g in ideal.gens() {
            let r = remainder(g, &basis, order);
            if !r.is_zero() {
                basis.push(r);
            }
        }
        let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        while let Some((i, j)) = pairs.pop() {
            let s = spoly(&basis[i], &basis[j], order);
            let r = remainder(&s, &basis, order);
            if !r.is_zero() {
                let k = basis.len();
                basis.push(r);
                pairs.extend((0..k).map(|i| (i, k)));
            }
        }
        BruteBasis { order, basis }
    }

    pub fn contains(&self, f: &QPoly) -> bool {
        remainder(f, &self.basis, self.order).is_zero()
    }
}

fn spoly(f: &QPoly, g: &QPoly, order: MonomialOrder) -> QPoly {
    let (mf, cf) = f.leading_term(order).expect("nonzero");
    let (mg, cg) = g.leading_term(order).expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.divide_into(&l).expect("lcm"), &cf.inv().expect("nonzero"));
    let b = g.mul_term(&mg.divide_into(&l).expect("lcm"), &cg.inv().expect("nonzero"));
    &a - &b
}

/// Remainder of the multivariate division algorithm.
fn remainder(f: &QPoly, basis: &[QPoly], order: MonomialOrder) -> QPoly {
    let n = f.nvars();
    let mut p = f.clone();
    let mut r = QPoly::zero(n);
    while let Ok((m, c)) = p.leading_term(order) {
        let (m, c) = (m.clone(), c.clone());
        let hit = basis.iter().find_map(|g| {
            let (mg, cg) = g.leading_term(order).expect("nonzero");
            mg.divide_into(&m).map(|q| (g, q, c.clone() / cg.clone()))
        });
        match hit {
            Some((g, q, k)) => p = &p - &g.mul_term(&q, &k),
            None => {
                let t = QPoly::term(n, m, c);
                p = &p - &t;
                r = &r + &t;
            }
        }
    }
    r
}

/// `f ∈ I` by an independent Gröbner computation under `order`.
pub fn brute_membership_in(f: &QPoly, ideal: &QIdeal, order: MonomialOrder) -> bool {
    BruteBasis::new(ideal, order).contains(f)
}

/// `f ∈ I` by an independent Gröbner computation under grevlex.
pub fn brute_membership(f: &QPoly, ideal: &QIdeal) -> bool {
    brute_membership_in(f, ideal, MonomialOrder::GrevLex)
}

/// Parameters for seeded random ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomIdealSpec {
    pub nvars: usize,
    pub max_gens: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    /// Coefficients are drawn from `-coeff_range..=coeff_range`, excluding 0.
    pub coeff_range: i64,
    pub seed: u64,
}

impl Default for RandomIdealSpec {
    fn default() -> Self {
        RandomIdealSpec {
            nvars: 2,
            max_gens: 4,
            max_degree: 4,
            max_terms: 4,
            coeff_range: 5,
            seed: 0,
        }
    }
}

impl RandomIdealSpec {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// An ideal with between 1 and `max_gens` nonzero generators.
    pub fn generate(&self) -> QIdeal {
        let mut rng = self.rng();
        self.generate_with(&mut rng)
    }

    pub fn generate_with(&self, rng: &mut impl Rng) -> QIdeal {
        let k = rng.gen_range(1..=self.max_gens.max(1));
        let gens = (0..k)
            .map(|_| loop {
                let p = random_poly(rng, self.nvars, self.max_degree, self.max_terms, self.coeff_range);
                if !p.is_zero() {
                    break p;
                }
            })
            .collect();
        QIdeal::new(self.nvars, gens)
    }
}

/// A polynomial with up to `max_terms` terms of degree at most `max_degree`.
pub fn random_poly(rng: &mut impl Rng, n: usize, max_degree: u32, max_terms: usize, coeff_range: i64) -> QPoly {
    let monos = monomials_up_to(n, max_degree);
    let k = rng.gen_range(1..=max_terms.max(1));
    QPoly::from_terms(
        n,
        (0..k).map(|_| {
            let m: Monomial = monos[rng.gen_range(0..monos.len())].clone();
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-coeff_range..=coeff_range);
            }
            (m, Rational::from_integer(c.into()))
        }),
    )
}
