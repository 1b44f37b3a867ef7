//! Dense univariate polynomials over the ground field.
//!
//! Used for minimal polynomials of endomorphisms. Splitting strategies need
//! coprime factorizations: rational roots over Q, full Berlekamp
//! factorization over small prime fields.

use crate::matrix::Mat;
use crate::scalar::{FieldSpec, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub field: FieldSpec,
    /// Coefficients low-to-high, no trailing zeros (zero poly = empty).
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly { field, coeffs: vec![field.one()] }
    }

    pub fn x(field: FieldSpec) -> Self {
        Poly { field, coeffs: vec![field.zero(), field.one()] }
    }

    /// x - c
    pub fn linear(field: FieldSpec, c: &Scalar) -> Self {
        Poly::new(field, vec![c.neg(), field.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &Scalar {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv();
        Poly::new(self.field, self.coeffs.iter().map(|c| c.mul(&inv)).collect())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&z);
            let b = rhs.coeffs.get(i).unwrap_or(&z);
            out.push(a.add(b));
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.scale(&self.field.one().neg()))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::new(self.field, out)
    }

    pub fn divrem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(rhs.coeffs.len()) + 1];
        let linv = rhs.lead().inv();
        while !rem.is_zero() && rem.degree() >= rhs.degree() {
            let shift = rem.degree() - rhs.degree();
            let c = rem.lead().mul(&linv);
            quot[shift] = quot[shift].add(&c);
            let mut sub = vec![self.field.zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|a| a.mul(&c)));
            rem = rem.sub(&Poly::new(self.field, sub));
        }
        (Poly::new(self.field, quot), rem)
    }

    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() { a } else { a.monic() }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field);
        }
        let out: Vec<Scalar> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.field.from_i64(i as i64)))
            .collect();
        Poly::new(self.field, out)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn eval_mat(&self, m: &Mat) -> Mat {
        let n = m.rows;
        let mut acc = Mat::zero(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].add(c);
            }
        }
        acc
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let mut acc = Poly::one(self.field);
        let mut base = self.divrem(modulus).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(modulus).1;
            }
            base = base.mul(&base).divrem(modulus).1;
            e >>= 1;
        }
        acc
    }

    /// Rational roots (over Q) or all roots in F_p (over a prime field),
    /// with multiplicities.
    pub fn roots_in_field(&self) -> Vec<(Scalar, usize)> {
        assert!(!self.is_zero());
        match self.field {
            FieldSpec::Prime(p) => {
                let mut out = Vec::new();
                let mut f = self.monic();
                for v in 0..p {
                    let x = Scalar::Fp { val: v, p };
                    let mut mult = 0;
                    while !f.is_zero() && f.degree() >= 1 && f.eval(&x).is_zero() {
                        let (q, r) = f.divrem(&Poly::linear(self.field, &x));
                        debug_assert!(r.is_zero());
                        f = q;
                        mult += 1;
                    }
                    if mult > 0 {
                        out.push((x, mult));
                    }
                }
                out
            }
            FieldSpec::Rational => {
                // clear denominators, then rational root theorem
                let mut f = self.clone();
                let mut out = Vec::new();
                loop {
                    if f.degree() == 0 {
                        break;
                    }
                    let Some(root) = rational_root(&f) else { break };
                    let mut mult = 0;
                    while f.degree() >= 1 && f.eval(&root).is_zero() {
                        let (q, r) = f.divrem(&Poly::linear(self.field, &root));
                        debug_assert!(r.is_zero());
                        f = q;
                        mult += 1;
                    }
                    out.push((root, mult));
                }
                out
            }
        }
    }

    /// Full squarefree-then-irreducible factorization over a prime field
    /// (Berlekamp with Cantor-Zassenhaus splitting). Input made monic.
    pub fn factor_fp(&self, rng_seed: u64) -> Vec<(Poly, usize)> {
        let FieldSpec::Prime(p) = self.field else {
            panic!("factor_fp on rational polynomial")
        };
        let mut out: Vec<(Poly, usize)> = Vec::new();
        let mut stack = vec![(self.monic(), 1usize)];
        let mut seed = rng_seed;
        while let Some((f, mult)) = stack.pop() {
            if f.degree() == 0 {
                continue;
            }
            // squarefree split
            let d = f.derivative();
            if d.is_zero() {
                // f = g(x^p); over the prime field, f(x) = g(x)^p with
                // coefficients unchanged (Frobenius fixes F_p)
                let mut g = Vec::new();
                for (i, c) in f.coeffs.iter().enumerate() {
                    if i % (p as usize) == 0 {
                        g.push(c.clone());
                    } else {
                        debug_assert!(c.is_zero());
                    }
                }
                stack.push((Poly::new(self.field, g), mult * p as usize));
                continue;
            }
            let g = f.gcd(&d);
            if g.degree() > 0 {
                let (q, _) = f.divrem(&g);
                stack.push((q, mult)); // squarefree part
                stack.push((g, mult)); // remaining multiplicity
                continue;
            }
            // f squarefree: Berlekamp
            for irr in berlekamp_squarefree(&f, p, &mut seed) {
                merge_factor(&mut out, irr, mult);
            }
        }
        out.sort_by(|a, b| (a.0.degree(), format!("{:?}", a.0.coeffs)).cmp(&(b.0.degree(), format!("{:?}", b.0.coeffs))));
        out
    }
}

fn merge_factor(out: &mut Vec<(Poly, usize)>, f: Poly, mult: usize) {
    for (g, m) in out.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    out.push((f, mult));
}

/// One rational root of f, if any (rational root theorem on the
/// denominator-cleared integer polynomial).
fn rational_root(f: &Poly) -> Option<Scalar> {
    if !f.coeffs.is_empty() && f.coeffs[0].is_zero() {
        return Some(f.field.zero());
    }
    let rats: Vec<BigRational> = f
        .coeffs
        .iter()
        .map(|c| match c {
            Scalar::Rat(r) => r.clone(),
            _ => unreachable!(),
        })
        .collect();
    let mut lcm = BigInt::one();
    for r in &rats {
        let d = r.denom();
        let g = num_integer::gcd(lcm.clone(), d.clone());
        lcm = lcm / g * d;
    }
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = ints.first()?.clone();
    let an = ints.last()?.clone();
    if a0.is_zero() {
        return Some(f.field.zero());
    }
    let ps = small_divisors(&a0.abs());
    let qs = small_divisors(&an.abs());
    for p in &ps {
        for q in &qs {
            for sign in [1i64, -1] {
                let cand = Scalar::Rat(BigRational::new(p * BigInt::from(sign), q.clone()));
                if f.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// All positive divisors if the number is small enough to factor by trial
/// division quickly; otherwise just 1 and |n| (sound but incomplete — the
/// caller treats a missing root as "no split found", never as a proof).
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    if n.is_zero() {
        return out;
    }
    if let Ok(v) = u64::try_from(n.clone()) {
        if v <= 10_000_000 {
            let mut divs = Vec::new();
            let mut d = 1u64;
            while d * d <= v {
                if v % d == 0 {
                    divs.push(d);
                    divs.push(v / d);
                }
                d += 1;
            }
            divs.sort_unstable();
            divs.dedup();
            return divs.into_iter().map(BigInt::from).collect();
        }
    }
    out.push(n.clone());
    out
}

/// Berlekamp factorization of a squarefree monic polynomial over F_p.
fn berlekamp_squarefree(f: &Poly, p: u64, seed: &mut u64) -> Vec<Poly> {
    let n = f.degree();
    if n <= 1 {
        return vec![f.clone()];
    }
    let field = f.field;
    // Q matrix: columns are x^{p*i} mod f in the basis 1, x, ..., x^{n-1}
    let xp = Poly::x(field).pow_mod(p, f);
    let mut cur = Poly::one(field);
    let mut q = Mat::zero(field, n, n);
    for j in 0..n {
        for (i, c) in cur.coeffs.iter().enumerate() {
            q[(i, j)] = c.clone();
        }
        cur = cur.mul(&xp).divrem(f).1;
    }
    // kernel of Q - I
    let qmi = q.sub(&Mat::identity(field, n));
    let ker = qmi.kernel();
    let r = ker.cols; // number of irreducible factors
    if r == 1 {
        return vec![f.clone()];
    }
    let mut factors = vec![f.clone()];
    // try deterministic splits with each kernel basis element and each c in F_p
    'outer: loop {
        for k in 0..ker.cols {
            let v = Poly::new(field, ker.col(k));
            if v.degree() == 0 {
                continue;
            }
            for c in 0..p {
                let shift = v.sub(&Poly::new(field, vec![Scalar::Fp { val: c, p }]));
                let mut next = Vec::new();
                for g in &factors {
                    if g.degree() <= 1 {
                        next.push(g.clone());
                        continue;
                    }
                    let h = g.gcd(&shift);
                    if h.degree() > 0 && h.degree() < g.degree() {
                        let (rest, _) = g.divrem(&h);
                        next.push(h.monic());
                        next.push(rest.monic());
                    } else {
                        next.push(g.clone());
                    }
                }
                factors = next;
                if factors.len() == r {
                    break 'outer;
                }
            }
        }
        if factors.len() == r {
            break;
        }
        // randomized Cantor-Zassenhaus style fallback for stubborn splits
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut coeffs = Vec::with_capacity(n);
        let mut s = *seed;
        for _ in 0..n {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            coeffs.push(Scalar::Fp { val: (s >> 33) % p, p });
        }
        let rand_poly = Poly::new(field, coeffs);
        let trace = if p == 2 {
            // x + x^2 + x^4 + ... composed with rand_poly, mod f
            let mut acc = rand_poly.divrem(f).1;
            let mut term = acc.clone();
            let bound = 64 - (n as u64).leading_zeros() as u64 + 2;
            for _ in 0..bound {
                term = term.mul(&term).divrem(f).1;
                acc = acc.add(&term);
            }
            acc
        } else {
            rand_poly.pow_mod((p - 1) / 2, f).sub(&Poly::one(field))
        };
        let mut next = Vec::new();
        for g in &factors {
            if g.degree() <= 1 {
                next.push(g.clone());
                continue;
            }
            let h = g.gcd(&trace);
            if h.degree() > 0 && h.degree() < g.degree() {
                let (rest, _) = g.divrem(&h);
                next.push(h.monic());
                next.push(rest.monic());
            } else {
                next.push(g.clone());
            }
        }
        factors = next;
        if factors.len() == r {
            break;
        }
    }
    factors
}

/// Minimal polynomial of a square matrix, via Krylov sequences.
pub fn min_poly(m: &Mat) -> Poly {
    let n = m.rows;
    let f = m.field;
    if n == 0 {
        return Poly::one(f);
    }
    let mut result = Poly::one(f);
    for start in 0..n {
        // minimal annihilator of e_start under m
        let mut v = vec![f.zero(); n];
        v[start] = f.one();
        let mut krylov = Mat::from_fn(f, n, 1, |i, _| v[i].clone());
        let mut vecs = vec![v.clone()];
        loop {
            let next = m.apply(vecs.last().unwrap());
            // is next in span of krylov?
            if let Some(coords) = krylov.solve(&next) {
                // annihilator: x^k - sum coords_i x^i
                let mut coeffs = coords.iter().map(|c| c.neg()).collect::<Vec<_>>();
                coeffs.push(f.one());
                let ann = Poly::new(f, coeffs);
                let g = result.gcd(&ann);
                let (lcm, _) = result.mul(&ann).divrem(&g);
                result = lcm.monic();
                break;
            }
            let nm = Mat::from_fn(f, n, 1, |i, _| next[i].clone());
            krylov = krylov.hcat(&nm);
            vecs.push(next);
        }
        if result.degree() == n {
            break;
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    fn poly(cs: &[i64]) -> Poly {
        Poly::new(q(), cs.iter().map(|&c| q().from_i64(c)).collect())
    }

    #[test]
    fn divrem_gcd() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let f = poly(&[2, -3, 1]);
        let g = poly(&[-1, 1]);
        let (quo, rem) = f.divrem(&g);
        assert!(rem.is_zero());
        assert_eq!(quo, poly(&[-2, 1]));
        assert_eq!(f.gcd(&g), g.monic());
    }

    #[test]
    fn rational_roots() {
        // (x - 1/2)(x + 3) * 2 = 2x^2 + 5x - 3
        let f = poly(&[-3, 5, 2]);
        let mut roots = f.roots_in_field();
        roots.sort_by_key(|(r, _)| r.to_literal());
        assert_eq!(roots.len(), 2);
        let vals: Vec<String> = roots.iter().map(|(r, _)| r.to_literal()).collect();
        assert!(vals.contains(&"1/2".to_string()));
        assert!(vals.contains(&"-3".to_string()));
    }

    #[test]
    fn minpoly_of_idempotent() {
        let f = q();
        let mut m = Mat::zero(f, 2, 2);
        m[(0, 0)] = f.one();
        // minimal polynomial of diag(1,0) is x(x-1) = x^2 - x
        assert_eq!(min_poly(&m), poly(&[0, -1, 1]).monic());
    }

    #[test]
    fn berlekamp_over_f2() {
        let f2 = FieldSpec::Prime(2);
        // x^2 + x = x(x+1)
        let f = Poly::new(f2, vec![f2.zero(), f2.one(), f2.one()]);
        let factors = f.factor_fp(0);
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(_, m)| *m == 1));
        // x^2 + x + 1 irreducible over F2
        let g = Poly::new(f2, vec![f2.one(), f2.one(), f2.one()]);
        let gf = g.factor_fp(0);
        assert_eq!(gf.len(), 1);
        assert_eq!(gf[0].0.degree(), 2);
        // x^4 + x^2 = x^2 (x+1)^2
        let h = Poly::new(f2, vec![f2.zero(), f2.zero(), f2.one(), f2.zero(), f2.one()]);
        let hf = h.factor_fp(0);
        assert_eq!(hf.len(), 2);
        assert!(hf.iter().all(|(p, m)| p.degree() == 1 && *m == 2));
    }
}
