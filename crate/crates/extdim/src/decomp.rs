//! Krull-Schmidt decomposition: splitting by endomorphisms, locality
//! certification through End/rad, and isomorphism testing.

use crate::fdalg::{primitive_idempotents, FdAlgebra};
use crate::matrix::Mat;
use crate::poly::{min_poly, Poly};
use crate::rep::{direct_sum, hom_space, kernel, subrep, Rep, RepMap};
use crate::scalar::FieldSpec;

/// One indecomposable summand class.
#[derive(Clone, Debug)]
pub struct Summand {
    pub rep: Rep,
    pub multiplicity: usize,
    /// End/rad was a division algebra of dimension > 1 that could not be
    /// split further; indecomposability is asserted with this caveat.
    pub local_nonsplit: bool,
}

/// A full decomposition of a module.
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// Idempotent endomorphisms of the original module projecting onto each
    /// individual leaf (one per copy, ordered by leaf).
    pub witnesses: Vec<RepMap>,
    /// Seed used for randomized search, for replay.
    pub seed: u64,
}

impl Decomposition {
    pub fn total_summands(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    pub fn any_flagged(&self) -> bool {
        self.summands.iter().any(|s| s.local_nonsplit)
    }
}

/// Outcome of a single splitting attempt.
enum SplitStep {
    Indecomposable { local_nonsplit: bool },
    /// Per-vertex bases of two complementary subrepresentations.
    Split(Vec<Mat>, Vec<Mat>),
}

/// The endomorphism algebra as abstract structure constants, with the basis
/// as maps. None when the module is zero.
pub fn end_algebra_of(m: &Rep) -> Option<(Vec<RepMap>, FdAlgebra)> {
    if m.is_zero() {
        return None;
    }
    let basis = hom_space(m, m);
    let total = m.total_dim();
    let f = m.algebra.field;
    let ops: Vec<Mat> = basis.iter().map(|e| block_diag(e, total)).collect();
    let fd = FdAlgebra::from_operators(f, &ops)?;
    Some((basis, fd))
}

fn block_diag(e: &RepMap, total: usize) -> Mat {
    let f = e.source.algebra.field;
    let mut m = Mat::zero(f, total, total);
    let mut off = 0;
    for v in 0..e.mats.len() {
        let b = &e.mats[v];
        for i in 0..b.rows {
            for j in 0..b.cols {
                m[(off + i, off + j)] = b[(i, j)].clone();
            }
        }
        off += b.rows;
    }
    m
}

fn try_split(m: &Rep, seed: u64) -> SplitStep {
    let f = m.algebra.field;
    let endos = hom_space(m, m);
    if endos.len() == 1 {
        return SplitStep::Indecomposable { local_nonsplit: false };
    }
    // candidate endomorphisms: basis, a few sums/products, seeded randoms
    let mut candidates: Vec<RepMap> = endos.clone();
    let top = endos.len().min(5);
    for i in 0..top {
        for j in 0..top {
            if i != j {
                candidates.push(endos[i].then(&endos[j]));
                candidates.push(endos[i].add(&endos[j]));
            }
        }
    }
    let mut s = seed ^ 0xd1b54a32d192ed03;
    for _ in 0..24 {
        let mut acc = RepMap::zero(m, m);
        for e in &endos {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = match f {
                FieldSpec::Rational => f.from_i64(((s >> 33) % 7) as i64 - 3),
                FieldSpec::Prime(p) => f.from_i64(((s >> 33) % p) as i64),
            };
            acc = acc.add(&e.scale(&c));
        }
        candidates.push(acc);
    }
    for cand in &candidates {
        if let Some((b1, b2)) = split_by_minpoly(m, cand, seed) {
            return SplitStep::Split(b1, b2);
        }
    }
    // no elementary split: certify through End/rad
    let Some((basis, fd)) = end_algebra_of(m) else {
        return SplitStep::Indecomposable { local_nonsplit: false };
    };
    let rad = fd.radical();
    if fd.dim - rad.cols == 1 {
        return SplitStep::Indecomposable { local_nonsplit: false };
    }
    // End/rad is bigger than k: either a splittable semisimple algebra or a
    // nonsplit division algebra
    match primitive_idempotents(&fd, seed) {
        Ok(dec) if dec.idempotents.len() >= 2 => {
            // any single idempotent (not 0 or 1) splits M = ker e (+) im e
            let coords = &dec.idempotents[0];
            let mut idem = RepMap::zero(m, m);
            for (c, b) in coords.iter().zip(basis.iter()) {
                idem = idem.add(&b.scale(c));
            }
            let kb: Vec<Mat> = idem.mats.iter().map(|mat| mat.kernel()).collect();
            let ib: Vec<Mat> = idem.mats.iter().map(|mat| mat.image()).collect();
            SplitStep::Split(kb, ib)
        }
        Ok(_) => SplitStep::Indecomposable { local_nonsplit: false },
        Err(_) => SplitStep::Indecomposable { local_nonsplit: true },
    }
}

/// Split M along coprime factors of the minimal polynomial of f, if any.
fn split_by_minpoly(m: &Rep, f: &RepMap, seed: u64) -> Option<(Vec<Mat>, Vec<Mat>)> {
    let fld = m.algebra.field;
    let total = m.total_dim();
    if total == 0 {
        return None;
    }
    let big = block_diag(f, total);
    let mp = min_poly(&big);
    if mp.degree() < 1 {
        return None;
    }
    // coprime split g * h = mp
    let (g, h) = match fld {
        FieldSpec::Prime(_) => {
            let factors = mp.factor_fp(seed);
            if factors.len() < 2 {
                return None;
            }
            let mut g = Poly::one(fld);
            for _ in 0..factors[0].1 {
                g = g.mul(&factors[0].0);
            }
            let (h, r) = mp.divrem(&g);
            debug_assert!(r.is_zero());
            (g, h)
        }
        FieldSpec::Rational => {
            let roots = mp.roots_in_field();
            if roots.is_empty() {
                return None;
            }
            let (r0, m0) = &roots[0];
            let mut g = Poly::one(fld);
            for _ in 0..*m0 {
                g = g.mul(&Poly::linear(fld, r0));
            }
            if g.degree() == mp.degree() {
                return None;
            }
            let (h, r) = mp.divrem(&g);
            debug_assert!(r.is_zero());
            (g, h)
        }
    };
    if g.degree() == 0 || h.degree() == 0 {
        return None;
    }
    // M = ker g(f) (+) ker h(f), both subrepresentations
    let b1: Vec<Mat> = f.mats.iter().map(|mv| g.eval_mat(mv).kernel()).collect();
    let b2: Vec<Mat> = f.mats.iter().map(|mv| h.eval_mat(mv).kernel()).collect();
    let d1: usize = b1.iter().map(|b| b.cols).sum();
    let d2: usize = b2.iter().map(|b| b.cols).sum();
    if d1 == 0 || d2 == 0 || d1 + d2 != total {
        return None;
    }
    Some((b1, b2))
}

/// Recursive decomposition into leaves, tracking inclusions into the root.
fn decompose_leaves(m: &Rep, inc: RepMap, seed: u64, out: &mut Vec<(Rep, RepMap, bool)>) {
    if m.is_zero() {
        return;
    }
    match try_split(m, seed) {
        SplitStep::Indecomposable { local_nonsplit } => out.push((m.clone(), inc, local_nonsplit)),
        SplitStep::Split(b1, b2) => {
            let (s1, i1) = subrep(m, &b1);
            let (s2, i2) = subrep(m, &b2);
            decompose_leaves(&s1, i1.then(&inc), seed, out);
            decompose_leaves(&s2, i2.then(&inc), seed, out);
        }
    }
}

/// Full Krull-Schmidt decomposition with idempotent witnesses.
pub fn decompose(m: &Rep, seed: u64) -> Decomposition {
    let mut leaves: Vec<(Rep, RepMap, bool)> = Vec::new();
    decompose_leaves(m, RepMap::identity(m), seed, &mut leaves);
    // witness idempotents: invert the combined iso (+) leaves -> M
    let witnesses = if leaves.is_empty() {
        Vec::new()
    } else {
        let f = m.algebra.field;
        let nv = m.dims.len();
        let mut combined: Vec<Mat> = (0..nv).map(|v| Mat::zero(f, m.dims[v], 0)).collect();
        for (_, inc, _) in &leaves {
            for v in 0..nv {
                combined[v] = combined[v].hcat(&inc.mats[v]);
            }
        }
        let inverses: Vec<Mat> = combined
            .iter()
            .map(|c| c.inverse().expect("leaves form a direct decomposition"))
            .collect();
        let mut ws = Vec::new();
        let mut offset = vec![0usize; nv];
        for (leaf, inc, _) in &leaves {
            let mut mats = Vec::with_capacity(nv);
            for v in 0..nv {
                let rows: Vec<usize> = (offset[v]..offset[v] + leaf.dims[v]).collect();
                let cols: Vec<usize> = (0..m.dims[v]).collect();
                let coords = inverses[v].submatrix(&rows, &cols);
                mats.push(inc.mats[v].mul(&coords));
            }
            for v in 0..nv {
                offset[v] += leaf.dims[v];
            }
            ws.push(RepMap { source: m.clone(), target: m.clone(), mats });
        }
        ws
    };
    // group leaves by isomorphism
    let mut summands: Vec<Summand> = Vec::new();
    for (leaf, _, flagged) in leaves {
        let mut placed = false;
        for s in &mut summands {
            if indec_isomorphic(&s.rep, &leaf).is_some() {
                s.multiplicity += 1;
                s.local_nonsplit |= flagged;
                placed = true;
                break;
            }
        }
        if !placed {
            summands.push(Summand { rep: leaf, multiplicity: 1, local_nonsplit: flagged });
        }
    }
    Decomposition { summands, witnesses, seed }
}

/// Isomorphism test for modules already known to be indecomposable: they are
/// isomorphic exactly when some composite g(f(-)) of hom-basis elements is
/// non-nilpotent (then f itself is the isomorphism).
pub fn indec_isomorphic(m: &Rep, n: &Rep) -> Option<RepMap> {
    if m.dims != n.dims {
        return None;
    }
    if m.is_zero() {
        return Some(RepMap::zero(m, n));
    }
    let fs = hom_space(m, n);
    if fs.is_empty() {
        return None;
    }
    let gs = hom_space(n, m);
    for f in &fs {
        for g in &gs {
            if !f.then(g).is_nilpotent() {
                debug_assert!(f.is_isomorphism());
                return Some(f.clone());
            }
        }
    }
    None
}

/// Isomorphism test for arbitrary modules via full decomposition.
pub fn isomorphic(m: &Rep, n: &Rep, seed: u64) -> bool {
    if m.dims != n.dims {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let dm = decompose(m, seed);
    let mut dn = decompose(n, seed);
    if dm.total_summands() != dn.total_summands() {
        return false;
    }
    let mut used = vec![false; dn.summands.len()];
    for s in &dm.summands {
        let mut found = false;
        for (i, t) in dn.summands.iter_mut().enumerate() {
            if used[i] || t.multiplicity != s.multiplicity {
                continue;
            }
            if indec_isomorphic(&s.rep, &t.rep).is_some() {
                used[i] = true;
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

/// Indecomposability report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indec {
    Yes,
    /// Indecomposable assuming the flagged division-algebra corner really is
    /// one (End/rad did not split over the ground field).
    YesLocalNonsplit,
    No,
}

pub fn is_indecomposable(m: &Rep, seed: u64) -> Indec {
    assert!(!m.is_zero(), "indecomposability of the zero module is undefined");
    match try_split(m, seed) {
        SplitStep::Indecomposable { local_nonsplit: false } => Indec::Yes,
        SplitStep::Indecomposable { local_nonsplit: true } => Indec::YesLocalNonsplit,
        SplitStep::Split(..) => Indec::No,
    }
}

/// Radical-homomorphism test: every component between indecomposable
/// summands is a non-isomorphism.
pub fn radical_hom(f: &RepMap, seed: u64) -> bool {
    let dm = decompose(&f.source, seed);
    let dn = decompose(&f.target, seed);
    // components: w_i . f . w'_j restricted to leaves; a component is an iso
    // only if the leaf reps are isomorphic and the composite is invertible
    for wi in &dm.witnesses {
        let (li, inci) = leaf_of(wi);
        for wj in &dn.witnesses {
            let (lj, incj) = leaf_of(wj);
            if li.dims != lj.dims {
                continue;
            }
            // component: leaf_i -> M -> N -> project to leaf_j
            let comp = component_map(&inci, f, wj, &lj, &incj);
            if comp.is_isomorphism() && !comp.is_zero() {
                return false;
            }
        }
    }
    true
}

fn leaf_of(w: &RepMap) -> (Rep, RepMap) {
    // the image of the idempotent witness, with its inclusion
    let bases: Vec<Mat> = w.mats.iter().map(|m| m.image()).collect();
    subrep(&w.source, &bases)
}

fn component_map(inci: &RepMap, f: &RepMap, wj: &RepMap, lj: &Rep, incj: &RepMap) -> RepMap {
    // leaf_i -> M -f-> N -wj-> N, then corestrict to leaf_j
    let through = inci.then(f).then(wj);
    let mut mats = Vec::with_capacity(through.mats.len());
    for v in 0..through.mats.len() {
        let coords = incj.mats[v]
            .solve_mat(&through.mats[v])
            .expect("witness image contains the component image");
        mats.push(coords);
    }
    RepMap { source: inci.source.clone(), target: lj.clone(), mats }
}

/// Direct sum of summand list with multiplicities, for round-trip checks.
pub fn assemble(summands: &[Summand]) -> Option<Rep> {
    let mut parts: Vec<&Rep> = Vec::new();
    for s in summands {
        for _ in 0..s.multiplicity {
            parts.push(&s.rep);
        }
    }
    if parts.is_empty() {
        return None;
    }
    Some(direct_sum(&parts).0)
}

/// Projectivity test via the cover, exposed here for symmetry with the
/// summand machinery.
pub fn strip_projective_summands(m: &Rep, seed: u64) -> Rep {
    let d = decompose(m, seed);
    let mut parts: Vec<Rep> = Vec::new();
    for s in &d.summands {
        if !crate::rep::is_projective(&s.rep) {
            for _ in 0..s.multiplicity {
                parts.push(s.rep.clone());
            }
        }
    }
    if parts.is_empty() {
        return Rep::zero(m.algebra.clone());
    }
    let refs: Vec<&Rep> = parts.iter().collect();
    direct_sum(&refs).0
}

/// Kernel-of-cover test used across the crate; here to keep the import graph
/// simple for callers that already depend on decomposition.
pub fn syzygy_is_zero(m: &Rep) -> bool {
    kernel(&crate::rep::projective_cover(m)).0.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_algebra;
    use crate::rep::{injective, projective, regular, simple};
    use std::sync::Arc;
    use crate::algebra::PathAlgebra;

    fn a3_sink() -> Arc<PathAlgebra> {
        parse_algebra("field Q\nvertex 1 2 3\narrow al : 1 -> 2\narrow be : 3 -> 2\n").unwrap()
    }

    #[test]
    fn simple_is_indecomposable() {
        let a = a3_sink();
        assert_eq!(is_indecomposable(&simple(&a, 0), 0), Indec::Yes);
    }

    #[test]
    fn double_copy_decomposes() {
        let a = a3_sink();
        let s = simple(&a, 0);
        let (m, _, _) = direct_sum(&[&s, &s]);
        let d = decompose(&m, 0);
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].multiplicity, 2);
        assert_eq!(d.witnesses.len(), 2);
        for w in &d.witnesses {
            assert!(w.then(w).sub(w).is_zero());
        }
    }

    #[test]
    fn regular_module_decomposes_into_projectives() {
        let a = a3_sink();
        let r = regular(&a);
        let d = decompose(&r, 0);
        assert_eq!(d.total_summands(), 3);
        let mut dims: Vec<Vec<usize>> = d.summands.iter().map(|s| s.rep.dims.clone()).collect();
        dims.sort();
        let mut want: Vec<Vec<usize>> = (0..3).map(|i| projective(&a, i).dims.clone()).collect();
        want.sort();
        assert_eq!(dims, want);
    }

    #[test]
    fn middle_injective_is_indecomposable() {
        let a = a3_sink();
        let i2 = injective(&a, 1);
        assert_eq!(i2.dims, vec![1, 1, 1]);
        assert_eq!(is_indecomposable(&i2, 0), Indec::Yes);
    }

    #[test]
    fn mixed_sum_splits_into_the_right_classes() {
        let a = a3_sink();
        let p1 = projective(&a, 0);
        let s2 = simple(&a, 1);
        let (m, _, _) = direct_sum(&[&p1, &s2, &p1]);
        let d = decompose(&m, 0);
        assert_eq!(d.total_summands(), 3);
        assert_eq!(d.summands.len(), 2);
        let assembled = assemble(&d.summands).unwrap();
        assert!(isomorphic(&m, &assembled, 0));
    }

    #[test]
    fn f2_decomposition_uses_small_char_machinery() {
        let a = parse_algebra("field F 2\nvertex 1 2\narrow a : 1 -> 2\n").unwrap();
        let s1 = simple(&a, 0);
        let s2 = simple(&a, 1);
        let p1 = projective(&a, 0);
        let (m, _, _) = direct_sum(&[&s1, &s1, &s2, &p1]);
        let d = decompose(&m, 0);
        assert_eq!(d.total_summands(), 4);
        assert_eq!(d.summands.len(), 3);
        let s1_class = d
            .summands
            .iter()
            .find(|s| s.rep.dims == vec![1, 0] && s.multiplicity == 2);
        assert!(s1_class.is_some());
    }

    #[test]
    fn radical_hom_detection() {
        let a = a3_sink();
        let p1 = projective(&a, 0);
        let id = RepMap::identity(&p1);
        assert!(!radical_hom(&id, 0));
        let s1 = simple(&a, 0);
        let s2 = simple(&a, 1);
        let z = RepMap::zero(&s1, &s2);
        assert!(radical_hom(&z, 0));
        // cover P(1) -> S(1) is a radical hom (non-iso between indecs)
        let cover = crate::rep::projective_cover(&s1);
        assert!(radical_hom(&cover, 0));
    }

    #[test]
    fn iso_testing_distinguishes_orientation() {
        let a = a3_sink();
        let p1 = projective(&a, 0);
        let p3 = projective(&a, 2);
        // same total dimension, different dimension vectors
        assert!(!isomorphic(&p1, &p3, 0));
        assert!(isomorphic(&p1, &p1, 0));
    }
}
