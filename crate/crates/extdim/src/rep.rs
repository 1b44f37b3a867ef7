//! Quiver representations as finite-dimensional left modules.
//!
//! An arrow `a: i -> j` acts by a `dims[j] x dims[i]` matrix on column
//! coordinates, and a path acts by composing its arrow matrices in traversal
//! order. With the application-order product on the algebra this makes
//! `A e_i` the projective module with top `S(i)`.

use crate::algebra::{AlgElt, Path, PathAlgebra};
use crate::matrix::{subspace, Mat};
use crate::scalar::Scalar;
use std::sync::Arc;

#[derive(Clone)]
pub struct Rep {
    pub algebra: Arc<PathAlgebra>,
    pub dims: Vec<usize>,
    pub mats: Vec<Mat>,
}

impl std::fmt::Debug for Rep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rep{:?}", self.dims)
    }
}

impl Rep {
    pub fn new(algebra: Arc<PathAlgebra>, dims: Vec<usize>, mats: Vec<Mat>) -> Result<Self, String> {
        let q = &algebra.quiver;
        if dims.len() != q.num_vertices() || mats.len() != q.arrows.len() {
            return Err("dimension vector or matrix list has the wrong length".into());
        }
        for (k, a) in q.arrows.iter().enumerate() {
            if mats[k].rows != dims[a.target] || mats[k].cols != dims[a.source] {
                return Err(format!(
                    "matrix for arrow `{}` must be {}x{}",
                    a.label, dims[a.target], dims[a.source]
                ));
            }
        }
        let rep = Rep { algebra, dims, mats };
        rep.check_relations()?;
        Ok(rep)
    }

    pub fn zero(algebra: Arc<PathAlgebra>) -> Self {
        let nv = algebra.quiver.num_vertices();
        let f = algebra.field;
        let mats = algebra.quiver.arrows.iter().map(|_| Mat::zero(f, 0, 0)).collect();
        Rep { algebra, dims: vec![0; nv], mats }
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn check_relations(&self) -> Result<(), String> {
        for rel in &self.algebra.relations {
            let (u, v) = (rel[0].0.source, rel[0].0.target);
            let mut acc = Mat::zero(self.algebra.field, self.dims[v], self.dims[u]);
            for (p, c) in rel {
                acc = acc.add(&self.act_path(p).scale(c));
            }
            if !acc.is_zero() {
                return Err("a relation does not vanish on the representation".into());
            }
        }
        Ok(())
    }

    /// Matrix of a path acting M_source -> M_target.
    pub fn act_path(&self, p: &Path) -> Mat {
        let f = self.algebra.field;
        let mut m = Mat::identity(f, self.dims[p.source]);
        for &a in &p.arrows {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// Matrix of an algebra element supported on paths u -> v.
    pub fn act_elt(&self, x: &AlgElt, u: usize, v: usize) -> Mat {
        let f = self.algebra.field;
        let mut acc = Mat::zero(f, self.dims[v], self.dims[u]);
        for (i, c) in &x.terms {
            let p = &self.algebra.basis[*i];
            assert!(p.source == u && p.target == v, "element not supported on paths {u}->{v}");
            acc = acc.add(&self.act_path(p).scale(c));
        }
        acc
    }

    /// rad^k M as per-vertex subspace bases (columns).
    pub fn radical_power(&self, k: usize) -> Vec<Mat> {
        let f = self.algebra.field;
        let mut cur: Vec<Mat> = self.dims.iter().map(|&d| Mat::identity(f, d)).collect();
        for _ in 0..k {
            let mut next: Vec<Mat> = self.dims.iter().map(|&d| Mat::zero(f, d, 0)).collect();
            for (ai, a) in self.algebra.quiver.arrows.iter().enumerate() {
                let img = self.mats[ai].mul(&cur[a.source]);
                next[a.target] = next[a.target].hcat(&img);
            }
            cur = next.into_iter().map(|m| m.image()).collect();
        }
        cur
    }

    /// Dimension vectors of M, rad M, rad^2 M, ... (strictly decreasing, the
    /// zero stage is not listed).
    pub fn radical_series(&self) -> Vec<Vec<usize>> {
        let mut out = vec![self.dims.clone()];
        for k in 1..=self.algebra.nilpotency {
            let dims: Vec<usize> = self.radical_power(k).iter().map(|m| m.cols).collect();
            if dims.iter().all(|&d| d == 0) {
                break;
            }
            out.push(dims);
        }
        out
    }

    /// Dimension vectors of soc M, soc^2 M, ... up to M itself.
    pub fn socle_series(&self) -> Vec<Vec<usize>> {
        let op = self.algebra.opposite();
        let d = dual(self, &op);
        let rads = d.radical_series();
        let mut out = Vec::new();
        for k in 1..=rads.len() {
            let rad_k: Vec<usize> =
                if k < rads.len() { rads[k].clone() } else { vec![0; self.dims.len()] };
            let dims: Vec<usize> =
                self.dims.iter().zip(rad_k.iter()).map(|(&a, &b)| a - b).collect();
            let done = dims == self.dims;
            out.push(dims);
            if done {
                break;
            }
        }
        out
    }

    /// Per-vertex bases of the socle (elements killed by every arrow).
    pub fn socle(&self) -> Vec<Mat> {
        let f = self.algebra.field;
        (0..self.dims.len())
            .map(|v| {
                let mut stacked = Mat::zero(f, 0, self.dims[v]);
                for (ai, a) in self.algebra.quiver.arrows.iter().enumerate() {
                    if a.source == v {
                        stacked = stacked.vcat(&self.mats[ai]);
                    }
                }
                stacked.kernel()
            })
            .collect()
    }
}

/// A homomorphism of representations: one matrix per vertex intertwining the
/// arrow actions.
#[derive(Clone)]
pub struct RepMap {
    pub source: Rep,
    pub target: Rep,
    pub mats: Vec<Mat>,
}

impl std::fmt::Debug for RepMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RepMap({:?} -> {:?})", self.source.dims, self.target.dims)
    }
}

impl RepMap {
    pub fn new(source: Rep, target: Rep, mats: Vec<Mat>) -> Result<Self, String> {
        let m = RepMap { source, target, mats };
        m.check_intertwining()?;
        Ok(m)
    }

    pub fn zero(source: &Rep, target: &Rep) -> Self {
        let f = source.algebra.field;
        let mats = (0..source.dims.len())
            .map(|v| Mat::zero(f, target.dims[v], source.dims[v]))
            .collect();
        RepMap { source: source.clone(), target: target.clone(), mats }
    }

    pub fn identity(m: &Rep) -> Self {
        let f = m.algebra.field;
        let mats = m.dims.iter().map(|&d| Mat::identity(f, d)).collect();
        RepMap { source: m.clone(), target: m.clone(), mats }
    }

    pub fn check_intertwining(&self) -> Result<(), String> {
        for (ai, a) in self.source.algebra.quiver.arrows.iter().enumerate() {
            let lhs = self.target.mats[ai].mul(&self.mats[a.source]);
            let rhs = self.mats[a.target].mul(&self.source.mats[ai]);
            if lhs != rhs {
                return Err(format!("map does not intertwine arrow `{}`", a.label));
            }
        }
        Ok(())
    }

    /// Apply self, then g.
    pub fn then(&self, g: &RepMap) -> RepMap {
        let mats = (0..self.mats.len()).map(|v| g.mats[v].mul(&self.mats[v])).collect();
        RepMap { source: self.source.clone(), target: g.target.clone(), mats }
    }

    pub fn add(&self, g: &RepMap) -> RepMap {
        let mats = (0..self.mats.len()).map(|v| self.mats[v].add(&g.mats[v])).collect();
        RepMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn sub(&self, g: &RepMap) -> RepMap {
        let mats = (0..self.mats.len()).map(|v| self.mats[v].sub(&g.mats[v])).collect();
        RepMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn scale(&self, c: &Scalar) -> RepMap {
        let mats = self.mats.iter().map(|m| m.scale(c)).collect();
        RepMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn neg(&self) -> RepMap {
        self.scale(&self.source.algebra.field.one().neg())
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.cols)
    }

    pub fn is_surjective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.rows)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.mats.iter().all(|m| m.is_invertible())
    }

    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.source.dims, self.target.dims);
        let d = self.source.total_dim().max(1);
        let mut p = self.clone();
        for _ in 0..d {
            if p.is_zero() {
                return true;
            }
            p = p.then(self);
        }
        p.is_zero()
    }

    pub fn inverse(&self) -> Option<RepMap> {
        let mut mats = Vec::with_capacity(self.mats.len());
        for m in &self.mats {
            mats.push(m.inverse()?);
        }
        Some(RepMap { source: self.target.clone(), target: self.source.clone(), mats })
    }

    /// All vertex matrices flattened into one coordinate vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for m in &self.mats {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.push(m[(i, j)].clone());
                }
            }
        }
        out
    }
}

/// Basis of Hom(M, N): the kernel of the intertwining system.
pub fn hom_space(m: &Rep, n: &Rep) -> Vec<RepMap> {
    let f = m.algebra.field;
    let nv = m.dims.len();
    // unknown layout: per vertex v, phi_v is n.dims[v] x m.dims[v], row-major
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offsets[nv];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in m.algebra.quiver.arrows.iter().enumerate() {
        let (u, v) = (a.source, a.target);
        let na = &n.mats[ai];
        let ma = &m.mats[ai];
        for i in 0..n.dims[v] {
            for j in 0..m.dims[u] {
                let mut row = vec![f.zero(); unknowns];
                // (N_a phi_u)[i][j] has coefficient N_a[i][k] at phi_u[k][j]
                for k in 0..n.dims[u] {
                    if !na[(i, k)].is_zero() {
                        let idx = offsets[u] + k * m.dims[u] + j;
                        row[idx] = row[idx].add(&na[(i, k)]);
                    }
                }
                // -(phi_v M_a)[i][j] has coefficient -M_a[k][j] at phi_v[i][k]
                for k in 0..m.dims[v] {
                    if !ma[(k, j)].is_zero() {
                        let idx = offsets[v] + i * m.dims[v] + k;
                        row[idx] = row[idx].sub(&ma[(k, j)]);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = if rows.is_empty() { Mat::zero(f, 0, unknowns) } else { Mat::from_rows(f, rows) };
    let ker = sys.kernel();
    let mut out = Vec::with_capacity(ker.cols);
    for c in 0..ker.cols {
        let col = ker.col(c);
        let mats: Vec<Mat> = (0..nv)
            .map(|v| {
                Mat::from_fn(f, n.dims[v], m.dims[v], |i, j| {
                    col[offsets[v] + i * m.dims[v] + j].clone()
                })
            })
            .collect();
        out.push(RepMap { source: m.clone(), target: n.clone(), mats });
    }
    out
}

pub fn hom_dim(m: &Rep, n: &Rep) -> usize {
    hom_space(m, n).len()
}

/// Coordinates of f in a hom-space basis, if it lies in the span.
pub fn hom_coords(basis: &[RepMap], f: &RepMap) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return if f.is_zero() { Some(vec![]) } else { None };
    }
    let fld = f.source.algebra.field;
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| b.flatten()).collect();
    let rows = cols[0].len();
    let mat = Mat::from_fn(fld, rows, cols.len(), |i, j| cols[j][i].clone());
    mat.solve(&f.flatten())
}

/// Combine a hom basis with coefficients.
pub fn hom_combine(basis: &[RepMap], coords: &[Scalar], source: &Rep, target: &Rep) -> RepMap {
    let mut out = RepMap::zero(source, target);
    for (c, b) in coords.iter().zip(basis.iter()) {
        if !c.is_zero() {
            out = out.add(&b.scale(c));
        }
    }
    out
}

/// Sub-representation spanned by per-vertex column bases (must be closed
/// under the arrow action). Returns the rep and its inclusion.
pub fn subrep(m: &Rep, bases: &[Mat]) -> (Rep, RepMap) {
    let dims: Vec<usize> = bases.iter().map(|b| b.cols).collect();
    let mut mats = Vec::with_capacity(m.mats.len());
    for (ai, a) in m.algebra.quiver.arrows.iter().enumerate() {
        let img = m.mats[ai].mul(&bases[a.source]);
        let coords =
            bases[a.target].solve_mat(&img).expect("subspace not closed under the arrow action");
        mats.push(coords);
    }
    let sub = Rep { algebra: m.algebra.clone(), dims, mats };
    let inc = RepMap { source: sub.clone(), target: m.clone(), mats: bases.to_vec() };
    debug_assert!(inc.check_intertwining().is_ok());
    (sub, inc)
}

/// Quotient of m by an arrow-closed subspace. Returns the rep and the
/// projection.
pub fn quotient(m: &Rep, bases: &[Mat]) -> (Rep, RepMap) {
    let nv = m.dims.len();
    let mut projs = Vec::with_capacity(nv);
    let mut secs = Vec::with_capacity(nv);
    for v in 0..nv {
        let b = bases[v].image();
        let e = subspace::complement(&b);
        let full = b.hcat(&e);
        let inv = full.inverse().expect("basis completion is invertible");
        let rows: Vec<usize> = (b.cols..b.cols + e.cols).collect();
        let all: Vec<usize> = (0..m.dims[v]).collect();
        projs.push(inv.submatrix(&rows, &all));
        secs.push(e);
    }
    let dims: Vec<usize> = projs.iter().map(|p| p.rows).collect();
    let mut mats = Vec::with_capacity(m.mats.len());
    for (ai, a) in m.algebra.quiver.arrows.iter().enumerate() {
        mats.push(projs[a.target].mul(&m.mats[ai]).mul(&secs[a.source]));
    }
    let q = Rep { algebra: m.algebra.clone(), dims, mats };
    let pmap = RepMap { source: m.clone(), target: q.clone(), mats: projs };
    debug_assert!(pmap.check_intertwining().is_ok());
    (q, pmap)
}

/// Kernel with its inclusion.
pub fn kernel(f: &RepMap) -> (Rep, RepMap) {
    let bases: Vec<Mat> = f.mats.iter().map(|m| m.kernel()).collect();
    subrep(&f.source, &bases)
}

/// Image with inclusion into the target and surjection from the source.
pub fn image(f: &RepMap) -> (Rep, RepMap, RepMap) {
    let bases: Vec<Mat> = f.mats.iter().map(|m| m.image()).collect();
    let (img, inc) = subrep(&f.target, &bases);
    let mut surj_mats = Vec::with_capacity(f.mats.len());
    for v in 0..f.mats.len() {
        surj_mats.push(bases[v].solve_mat(&f.mats[v]).expect("image coordinates"));
    }
    let surj = RepMap { source: f.source.clone(), target: img.clone(), mats: surj_mats };
    debug_assert!(surj.check_intertwining().is_ok());
    (img, inc, surj)
}

/// Cokernel with its projection.
pub fn cokernel(f: &RepMap) -> (Rep, RepMap) {
    let bases: Vec<Mat> = f.mats.iter().map(|m| m.image()).collect();
    quotient(&f.target, &bases)
}

/// A short exact sequence 0 -> X -> Y -> Z -> 0.
#[derive(Clone, Debug)]
pub struct Ses {
    pub inj: RepMap,
    pub surj: RepMap,
}

impl Ses {
    pub fn new(inj: RepMap, surj: RepMap) -> Result<Self, String> {
        let s = Ses { inj, surj };
        s.validate()?;
        Ok(s)
    }

    pub fn x(&self) -> &Rep {
        &self.inj.source
    }
    pub fn y(&self) -> &Rep {
        &self.inj.target
    }
    pub fn z(&self) -> &Rep {
        &self.surj.target
    }

    pub fn validate(&self) -> Result<(), String> {
        if !self.inj.is_injective() {
            return Err("left map is not injective".into());
        }
        if !self.surj.is_surjective() {
            return Err("right map is not surjective".into());
        }
        if !self.inj.then(&self.surj).is_zero() {
            return Err("composite is nonzero".into());
        }
        for v in 0..self.inj.mats.len() {
            let rank_i = self.inj.mats[v].rank();
            let ker_dim = self.surj.mats[v].cols - self.surj.mats[v].rank();
            if rank_i != ker_dim {
                return Err("image of the injection is smaller than the kernel".into());
            }
            if self.x().dims[v] + self.z().dims[v] != self.y().dims[v] {
                return Err("dimension vectors do not add".into());
            }
        }
        Ok(())
    }

    /// Does the surjection admit a section?
    pub fn splits(&self) -> bool {
        section_of(&self.surj).is_some()
    }
}

/// A right inverse of a surjection, if one exists.
pub fn section_of(p: &RepMap) -> Option<RepMap> {
    if p.target.is_zero() {
        return Some(RepMap::zero(&p.target, &p.source));
    }
    let homs = hom_space(&p.target, &p.source);
    if homs.is_empty() {
        return None;
    }
    let composed: Vec<RepMap> = homs.iter().map(|s| s.then(p)).collect();
    let id = RepMap::identity(&p.target);
    let coords = hom_coords(&composed, &id)?;
    Some(hom_combine(&homs, &coords, &p.target, &p.source))
}

/// Direct sum with injections and projections (parts in the given order).
pub fn direct_sum(parts: &[&Rep]) -> (Rep, Vec<RepMap>, Vec<RepMap>) {
    assert!(!parts.is_empty());
    let alg = parts[0].algebra.clone();
    let f = alg.field;
    let nv = alg.quiver.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let mut mats = Vec::new();
    for ai in 0..alg.quiver.arrows.len() {
        let mut m = parts[0].mats[ai].clone();
        for p in &parts[1..] {
            m = m.direct_sum(&p.mats[ai]);
        }
        mats.push(m);
    }
    let sum = Rep { algebra: alg, dims, mats };
    let mut injs = Vec::new();
    let mut projs = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        let mut imats = Vec::new();
        let mut pmats = Vec::new();
        for v in 0..nv {
            let before: usize = parts[..k].iter().map(|q| q.dims[v]).sum();
            let mut inj = Mat::zero(f, sum.dims[v], p.dims[v]);
            for i in 0..p.dims[v] {
                inj[(before + i, i)] = f.one();
            }
            pmats.push(inj.transpose());
            imats.push(inj);
        }
        injs.push(RepMap { source: (*p).clone(), target: sum.clone(), mats: imats });
        projs.push(RepMap { source: sum.clone(), target: (*p).clone(), mats: pmats });
    }
    (sum, injs, projs)
}

/// The simple module S(i).
pub fn simple(alg: &Arc<PathAlgebra>, i: usize) -> Rep {
    let f = alg.field;
    let nv = alg.quiver.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| usize::from(v == i)).collect();
    let mats = alg
        .quiver
        .arrows
        .iter()
        .map(|a| Mat::zero(f, dims[a.target], dims[a.source]))
        .collect();
    Rep { algebra: alg.clone(), dims, mats }
}

/// Algebra-basis indices of the paths spanning P(i), grouped per vertex and
/// sorted by basis index (so the trivial path e_i is the first slot at i).
pub fn proj_basis(alg: &PathAlgebra, i: usize) -> Vec<Vec<usize>> {
    let nv = alg.quiver.num_vertices();
    let mut out = vec![Vec::new(); nv];
    for (k, p) in alg.basis.iter().enumerate() {
        if p.source == i {
            out[p.target].push(k);
        }
    }
    out
}

/// The indecomposable projective P(i) = A e_i.
pub fn projective(alg: &Arc<PathAlgebra>, i: usize) -> Rep {
    let f = alg.field;
    let pb = proj_basis(alg, i);
    let dims: Vec<usize> = pb.iter().map(|v| v.len()).collect();
    let mut mats = Vec::new();
    for (ai, a) in alg.quiver.arrows.iter().enumerate() {
        let (u, v) = (a.source, a.target);
        let mut m = Mat::zero(f, dims[v], dims[u]);
        let arrow = alg.arrow_elt(ai);
        for (col, &bk) in pb[u].iter().enumerate() {
            let prod = alg.mul(&arrow, &AlgElt::basis(bk, &f));
            for (t, c) in &prod.terms {
                let row = pb[v].iter().position(|&x| x == *t).expect("product stays in P(i)");
                m[(row, col)] = c.clone();
            }
        }
        mats.push(m);
    }
    Rep { algebra: alg.clone(), dims, mats }
}

/// A direct sum of indecomposable projectives with bookkeeping for Yoneda
/// generator positions.
pub struct ProjSum {
    pub alg: Arc<PathAlgebra>,
    /// Vertex of each summand, in order.
    pub summands: Vec<usize>,
    pub rep: Rep,
    /// col_offset[s][v]: first column of summand s inside vertex block v.
    col_offset: Vec<Vec<usize>>,
}

impl ProjSum {
    pub fn new(alg: &Arc<PathAlgebra>, summands: Vec<usize>) -> ProjSum {
        let nv = alg.quiver.num_vertices();
        if summands.is_empty() {
            return ProjSum {
                alg: alg.clone(),
                summands,
                rep: Rep::zero(alg.clone()),
                col_offset: Vec::new(),
            };
        }
        let parts: Vec<Rep> = summands.iter().map(|&v| projective(alg, v)).collect();
        let refs: Vec<&Rep> = parts.iter().collect();
        let (rep, _, _) = direct_sum(&refs);
        let mut col_offset = vec![vec![0usize; nv]; summands.len()];
        for v in 0..nv {
            let mut acc = 0;
            for (s, part) in parts.iter().enumerate() {
                col_offset[s][v] = acc;
                acc += part.dims[v];
            }
        }
        ProjSum { alg: alg.clone(), summands, rep, col_offset }
    }

    /// Column range of summand s inside the vertex-v block.
    pub fn block_cols(&self, s: usize, v: usize) -> std::ops::Range<usize> {
        let start = self.col_offset[s][v];
        let len = proj_basis(&self.alg, self.summands[s])[v].len();
        start..start + len
    }

    /// Index of the generator e_{v_s} inside the vertex-v_s block.
    pub fn generator_col(&self, s: usize) -> usize {
        let v = self.summands[s];
        let pb = proj_basis(&self.alg, v);
        let pos = pb[v].iter().position(|&k| k == v).expect("trivial path in its own block");
        self.col_offset[s][v] + pos
    }

    /// The map from this sum determined by generator images (Yoneda).
    pub fn map_from(&self, target: &Rep, gens: &[Vec<Scalar>]) -> RepMap {
        assert_eq!(gens.len(), self.summands.len());
        let f = self.alg.field;
        let nv = self.alg.quiver.num_vertices();
        let mut mats: Vec<Mat> =
            (0..nv).map(|w| Mat::zero(f, target.dims[w], self.rep.dims[w])).collect();
        for (s, &v) in self.summands.iter().enumerate() {
            let pb = proj_basis(&self.alg, v);
            for w in 0..nv {
                for (slot, &bk) in pb[w].iter().enumerate() {
                    let path = &self.alg.basis[bk];
                    let vec = target.act_path(path).apply(&gens[s]);
                    let col = self.col_offset[s][w] + slot;
                    for r in 0..target.dims[w] {
                        mats[w][(r, col)] = vec[r].clone();
                    }
                }
            }
        }
        let map = RepMap { source: self.rep.clone(), target: target.clone(), mats };
        debug_assert!(map.check_intertwining().is_ok());
        map
    }
}

/// Projective cover P(top M) ->> M, with the summand structure.
pub fn projective_cover_sum(m: &Rep) -> (ProjSum, RepMap) {
    let alg = &m.algebra;
    let rad = m.radical_power(1);
    let mut summands = Vec::new();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    let f = alg.field;
    for v in 0..m.dims.len() {
        // complement of rad M at v gives the generators
        let mut basis = rad[v].clone();
        for j in 0..m.dims[v] {
            let mut e = vec![f.zero(); m.dims[v]];
            e[j] = f.one();
            if !subspace::contains(&basis, &e) {
                let em = Mat::from_fn(f, m.dims[v], 1, |r, _| e[r].clone());
                basis = basis.hcat(&em);
                summands.push(v);
                gens.push(e);
            }
        }
    }
    let ps = ProjSum::new(alg, summands);
    let map = if ps.summands.is_empty() {
        RepMap::zero(&ps.rep, m)
    } else {
        ps.map_from(m, &gens)
    };
    debug_assert!(m.is_zero() || map.is_surjective());
    (ps, map)
}

/// Projective cover as a plain map.
pub fn projective_cover(m: &Rep) -> RepMap {
    projective_cover_sum(m).1
}

/// Lift h: P -> Z through a surjection p: Y -> Z (P projective, given with
/// its summand structure), producing g with g;p = h.
pub fn lift_projective(ps: &ProjSum, h: &RepMap, p: &RepMap) -> RepMap {
    let mut gens = Vec::with_capacity(ps.summands.len());
    for s in 0..ps.summands.len() {
        let v = ps.summands[s];
        let col = ps.generator_col(s);
        let hval = h.mats[v].col(col);
        let y = p.mats[v].solve(&hval).expect("lift through surjection");
        gens.push(y);
    }
    let g = ps.map_from(&p.source, &gens);
    debug_assert!(g.then(p).sub(h).is_zero());
    g
}

/// Duality to the opposite algebra: transposed matrices over reversed arrows.
pub fn dual(m: &Rep, op: &Arc<PathAlgebra>) -> Rep {
    debug_assert_eq!(op.quiver.arrows.len(), m.algebra.quiver.arrows.len());
    Rep {
        algebra: op.clone(),
        dims: m.dims.clone(),
        mats: m.mats.iter().map(|mat| mat.transpose()).collect(),
    }
}

/// Dual of a map (direction reverses).
pub fn dual_map(f: &RepMap, op: &Arc<PathAlgebra>) -> RepMap {
    RepMap {
        source: dual(&f.target, op),
        target: dual(&f.source, op),
        mats: f.mats.iter().map(|m| m.transpose()).collect(),
    }
}

/// The indecomposable injective I(i) = D(e_i A).
pub fn injective(alg: &Arc<PathAlgebra>, i: usize) -> Rep {
    let op = alg.opposite();
    dual(&projective(&op, i), alg)
}

/// The regular module, as the ordered sum of all P(i).
pub fn regular(alg: &Arc<PathAlgebra>) -> Rep {
    ProjSum::new(alg, (0..alg.quiver.num_vertices()).collect()).rep
}

/// Injective envelope M >-> I(soc M), computed by duality.
pub fn injective_envelope(m: &Rep) -> RepMap {
    let op = m.algebra.opposite();
    let dm = dual(m, &op);
    let cover = projective_cover(&dm);
    dual_map(&cover, &m.algebra)
}

pub fn is_projective(m: &Rep) -> bool {
    let c = projective_cover(m);
    c.mats.iter().all(|mat| mat.rows == mat.cols && mat.is_invertible())
}

pub fn is_injective_module(m: &Rep) -> bool {
    let e = injective_envelope(m);
    e.mats.iter().all(|mat| mat.rows == mat.cols && mat.is_invertible())
}

/// Multiplicity vector of P(v)-summands of a projective module, read off its
/// top. Returns None when the module is not projective.
pub fn projective_multiplicities(m: &Rep) -> Option<Vec<usize>> {
    if !is_projective(m) {
        return None;
    }
    let rad = m.radical_power(1);
    Some((0..m.dims.len()).map(|v| m.dims[v] - rad[v].cols).collect())
}

/// Nakayama functor on a projective module: nu(P(i)) = I(i) summandwise.
pub fn nakayama(m: &Rep) -> Result<Rep, String> {
    let mult = projective_multiplicities(m).ok_or("input is not projective")?;
    let mut parts: Vec<Rep> = Vec::new();
    for (v, &k) in mult.iter().enumerate() {
        for _ in 0..k {
            parts.push(injective(&m.algebra, v));
        }
    }
    if parts.is_empty() {
        return Ok(Rep::zero(m.algebra.clone()));
    }
    let refs: Vec<&Rep> = parts.iter().collect();
    Ok(direct_sum(&refs).0)
}

/// Syzygy: kernel of the projective cover for n > 0, cokernel of the
/// injective envelope for n < 0, M itself for n = 0.
pub fn syzygy(m: &Rep, n: i64) -> Rep {
    let mut cur = m.clone();
    if n >= 0 {
        for _ in 0..n {
            cur = kernel(&projective_cover(&cur)).0;
        }
    } else {
        for _ in 0..(-n) {
            cur = cokernel(&injective_envelope(&cur)).0;
        }
    }
    cur
}

/// One rotation step: from 0 -> A -> B -> C -> 0 build
/// 0 -> Omega(C) -> A (+) P(C) -> B -> 0.
/// Returns the sequence and the per-vertex dimension of the A-block inside
/// the middle term (the middle is a literal direct sum A (+) P(C)).
fn rotate_ses(s: &Ses) -> (Ses, Vec<usize>) {
    let (ps, cover_c) = projective_cover_sum(s.z());
    let lam = lift_projective(&ps, &cover_c, &s.surj);
    let a = s.x();
    let (mid, _, _) = direct_sum(&[a, &ps.rep]);
    // phi = [inj | lambda]: A (+) P_C -> B
    let mut phi_mats = Vec::with_capacity(mid.dims.len());
    for v in 0..mid.dims.len() {
        phi_mats.push(s.inj.mats[v].hcat(&lam.mats[v]));
    }
    let phi = RepMap { source: mid.clone(), target: s.y().clone(), mats: phi_mats };
    debug_assert!(phi.check_intertwining().is_ok());
    // Omega C = ker(cover_c), included via p |-> (-inj^{-1}(lambda p), p)
    let (oc, oc_inc) = kernel(&cover_c);
    let lam_oc = oc_inc.then(&lam);
    let mut j_mats = Vec::with_capacity(mid.dims.len());
    for v in 0..mid.dims.len() {
        let a_coords = s.inj.mats[v]
            .solve_mat(&lam_oc.mats[v].neg())
            .expect("lambda(Omega C) lies in the image of the injection");
        j_mats.push(a_coords.vcat(&oc_inc.mats[v]));
    }
    let j = RepMap { source: oc, target: mid, mats: j_mats };
    debug_assert!(j.check_intertwining().is_ok());
    let ses = Ses::new(j, phi).expect("rotation produces an exact sequence");
    (ses, a.dims.clone())
}

/// Restrict a sequence 0 -> A -> B -> D (+) Q -> 0 (literal sum split given
/// by `d_dims`) to the D-part: 0 -> A -> B' -> D -> 0.
fn prune_right_summand(s: &Ses, d_dims: &[usize]) -> Ses {
    let f = s.x().algebra.field;
    let c = s.z();
    // projection C -> Q (rows after the D block)
    let mut pq_mats = Vec::new();
    let mut pd_mats = Vec::new();
    for v in 0..c.dims.len() {
        let d = d_dims[v];
        let q = c.dims[v] - d;
        let mut pq = Mat::zero(f, q, c.dims[v]);
        for i in 0..q {
            pq[(i, d + i)] = f.one();
        }
        let mut pd = Mat::zero(f, d, c.dims[v]);
        for i in 0..d {
            pd[(i, i)] = f.one();
        }
        pq_mats.push(pq);
        pd_mats.push(pd);
    }
    // B' = ker(B -> C -> Q)
    let to_q: Vec<Mat> = (0..c.dims.len()).map(|v| pq_mats[v].mul(&s.surj.mats[v])).collect();
    let bases: Vec<Mat> = to_q.iter().map(|m| m.kernel()).collect();
    let (bprime, inc) = subrep(s.y(), &bases);
    // A -> B': coordinates of inj in the kernel basis
    let mut inj_mats = Vec::new();
    for v in 0..c.dims.len() {
        inj_mats.push(inc.mats[v].solve_mat(&s.inj.mats[v]).expect("A lands in the pullback"));
    }
    let inj = RepMap { source: s.x().clone(), target: bprime.clone(), mats: inj_mats };
    // B' -> D
    let mut surj_mats = Vec::new();
    for v in 0..c.dims.len() {
        surj_mats.push(pd_mats[v].mul(&s.surj.mats[v]).mul(&inc.mats[v]));
    }
    let dr = {
        // D as a subquotient: build the literal D rep from C's first blocks
        let mut dmats = Vec::new();
        for (ai, a) in c.algebra.quiver.arrows.iter().enumerate() {
            let rows: Vec<usize> = (0..d_dims[a.target]).collect();
            let cols: Vec<usize> = (0..d_dims[a.source]).collect();
            dmats.push(c.mats[ai].submatrix(&rows, &cols));
        }
        Rep { algebra: c.algebra.clone(), dims: d_dims.to_vec(), mats: dmats }
    };
    let surj = RepMap { source: bprime, target: dr, mats: surj_mats };
    Ses::new(inj, surj).expect("pruned sequence is exact")
}

/// From 0 -> X -> Y -> Z -> 0 build the exact sequence
/// 0 -> Omega^{i+1}(Z) -> Omega^i(X) (+) P -> Omega^i(Y) -> 0.
pub fn syzygy_sequence(s: &Ses, i: usize) -> Ses {
    let mut cur = s.clone();
    let mut last_split: Option<Vec<usize>> = None;
    for step in 0..(3 * i + 1) {
        let (next, split) = rotate_ses(&cur);
        cur = next;
        if step + 2 == 3 * i + 1 {
            // the middle of the penultimate step becomes the right term of
            // the final one, so its split locates the projective summand
            last_split = Some(split);
        }
    }
    match last_split {
        Some(split) => prune_right_summand(&cur, &split),
        None => cur,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_algebra;

    fn a3_sink() -> Arc<PathAlgebra> {
        // 1 -> 2 <- 3
        parse_algebra("field Q\nvertex 1 2 3\narrow al : 1 -> 2\narrow be : 3 -> 2\n").unwrap()
    }

    fn loop_chain() -> Arc<PathAlgebra> {
        // vertex 1 with loop g (g.g = 0), g then b vanishing, chain 2->..->6
        parse_algebra(
            "field Q\nvertex 1 2 3 4 5 6\n\
             arrow g : 1 -> 1\narrow b : 1 -> 4\n\
             arrow a2 : 2 -> 3\narrow a3 : 3 -> 4\narrow a4 : 4 -> 5\narrow a5 : 5 -> 6\n\
             rel g.g\nrel g.b\n",
        )
        .unwrap()
    }

    #[test]
    fn projective_dimensions_match_path_counts() {
        let a = a3_sink();
        let p1 = projective(&a, 0);
        assert_eq!(p1.dims, vec![1, 1, 0]);
        let p2 = projective(&a, 1);
        assert_eq!(p2.dims, vec![0, 1, 0]);
        let p3 = projective(&a, 2);
        assert_eq!(p3.dims, vec![0, 1, 1]);
    }

    #[test]
    fn loop_chain_projectives_match_displayed_shapes() {
        let a = loop_chain();
        let p1 = projective(&a, 0);
        // top 1, radical 1 and the chain 4,5,6
        assert_eq!(p1.dims, vec![2, 0, 0, 1, 1, 1]);
        let p2 = projective(&a, 1);
        assert_eq!(p2.dims, vec![0, 1, 1, 1, 1, 1]);
        let p6 = projective(&a, 5);
        assert_eq!(p6.dims, vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(a.loewy_length(), 5);
    }

    #[test]
    fn yoneda_hom_dimension() {
        let a = loop_chain();
        for i in 0..6 {
            let p = projective(&a, i);
            for j in 0..6 {
                let s = simple(&a, j);
                assert_eq!(hom_dim(&p, &s), usize::from(i == j));
            }
            let m = projective(&a, 0);
            assert_eq!(hom_dim(&p, &m), m.dims[i]);
        }
    }

    #[test]
    fn hom_between_nonisomorphic_projectives() {
        let a = a3_sink();
        // Hom(P(1), P(3)) = 0: no paths from 3 to 1
        assert_eq!(hom_dim(&projective(&a, 0), &projective(&a, 2)), 0);
        // Hom(P(2), P(1)) = 1: the arrow al gives the socle inclusion
        assert_eq!(hom_dim(&projective(&a, 1), &projective(&a, 0)), 1);
    }

    #[test]
    fn kernel_image_cokernel_contract() {
        let a = a3_sink();
        let p1 = projective(&a, 0);
        let s1 = simple(&a, 0);
        let cover = projective_cover(&s1);
        assert!(cover.is_surjective());
        assert_eq!(cover.source.dims, p1.dims);
        let (k, ki) = kernel(&cover);
        // Omega S(1) = rad P(1) = S(2)
        assert_eq!(k.dims, vec![0, 1, 0]);
        assert!(ki.is_injective());
        let (c, _) = cokernel(&cover);
        assert!(c.is_zero());
        let (img, _, _) = image(&cover);
        assert_eq!(img.dims, s1.dims);
    }

    #[test]
    fn zero_and_identity_maps() {
        let a = a3_sink();
        let m = projective(&a, 0);
        let z = RepMap::zero(&m, &m);
        let (k, _) = kernel(&z);
        assert_eq!(k.dims, m.dims);
        let id = RepMap::identity(&m);
        assert!(kernel(&id).0.is_zero());
        assert!(cokernel(&id).0.is_zero());
    }

    #[test]
    fn cover_kernel_of_s1_in_loop_chain() {
        let a = loop_chain();
        let s1 = simple(&a, 0);
        let cover = projective_cover(&s1);
        let (k, _) = kernel(&cover);
        // rad P(1) = S(1) (+) P(4): dims (1,0,0,1,1,1)
        assert_eq!(k.dims, vec![1, 0, 0, 1, 1, 1]);
        // syzygy is periodic: Omega^2 S(1) has the same dimension vector
        let o2 = syzygy(&s1, 2);
        assert_eq!(o2.dims, k.dims);
    }

    #[test]
    fn syzygy_of_projective_vanishes() {
        let a = loop_chain();
        for i in 0..6 {
            assert!(syzygy(&projective(&a, i), 1).is_zero());
        }
    }

    #[test]
    fn hereditary_second_syzygy_vanishes() {
        let a = a3_sink();
        for i in 0..3 {
            assert!(syzygy(&simple(&a, i), 2).is_zero());
        }
    }

    #[test]
    fn injectives_and_duality() {
        let a = a3_sink();
        // I(2) is the module 1 3 over 2: dims (1,1,1)
        let i2 = injective(&a, 1);
        assert_eq!(i2.dims, vec![1, 1, 1]);
        // dual is a dimension-preserving involution on the nose
        let op = a.opposite();
        let m = projective(&a, 0);
        let dd = dual(&dual(&m, &op), &a);
        assert_eq!(dd.dims, m.dims);
        assert_eq!(dd.mats, m.mats);
        // dual(P_A(i)) = I_{A^op}(i)
        for i in 0..3 {
            let d = dual(&projective(&a, i), &op);
            let iop = injective(&op, i);
            assert_eq!(d.dims, iop.dims);
            assert_eq!(hom_dim(&d, &iop), hom_dim(&d, &d));
        }
    }

    #[test]
    fn nakayama_sends_projectives_to_injectives() {
        let a = loop_chain();
        for i in 0..6 {
            let p = projective(&a, i);
            let nu = nakayama(&p).unwrap();
            let inj = injective(&a, i);
            assert_eq!(nu.dims, inj.dims);
        }
        let s = simple(&a, 0);
        assert!(nakayama(&s).is_err());
    }

    #[test]
    fn cosyzygy_of_injective_vanishes() {
        let a = a3_sink();
        for i in 0..3 {
            assert!(syzygy(&injective(&a, i), -1).is_zero());
        }
    }

    #[test]
    fn radical_and_socle_series() {
        let semisimple = parse_algebra("field Q\nvertex 1 2\n").unwrap();
        let r = regular(&semisimple);
        assert_eq!(r.radical_series(), vec![vec![1, 1]]);
        let chain = loop_chain();
        let reg = regular(&chain);
        assert_eq!(reg.radical_series().len(), 5);
        let s = simple(&chain, 0);
        assert_eq!(s.socle_series(), vec![vec![1, 0, 0, 0, 0, 0]]);
    }

    #[test]
    fn ses_validation_and_split_detection() {
        let a = a3_sink();
        let s1 = simple(&a, 0);
        let cover = projective_cover(&s1);
        let (k, ki) = kernel(&cover);
        let ses = Ses::new(ki, cover.clone()).unwrap();
        assert_eq!(ses.x().dims, k.dims);
        // 0 -> S(2) -> P(1) -> S(1) -> 0 does not split
        assert!(!ses.splits());
        // a direct sum sequence splits
        let s2 = simple(&a, 1);
        let (sum, injs, projs) = direct_sum(&[&s1, &s2]);
        let ses2 = Ses::new(injs[0].clone(), projs[1].clone()).unwrap();
        assert!(ses2.splits());
        let _ = sum;
    }

    #[test]
    fn syzygy_sequence_shapes() {
        let a = loop_chain();
        let s1 = simple(&a, 0);
        let cover = projective_cover(&s1);
        let (_, ki) = kernel(&cover);
        let ses = Ses::new(ki, cover).unwrap();
        for i in 0..3 {
            let out = syzygy_sequence(&ses, i);
            out.validate().unwrap();
            // right term is Omega^i of the middle P(1)
            let expect_right = syzygy(ses.y(), i as i64);
            assert_eq!(out.z().total_dim(), expect_right.total_dim());
            // left term is Omega^{i+1} of S(1)
            let expect_left = syzygy(ses.z(), i as i64 + 1);
            assert_eq!(out.x().dims, expect_left.dims);
        }
    }

    #[test]
    fn split_sequence_with_projective_quotient_stays_split() {
        let a = a3_sink();
        let m = simple(&a, 0);
        let n = projective(&a, 2);
        let (_, injs, projs) = direct_sum(&[&m, &n]);
        let ses = Ses::new(injs[0].clone(), projs[1].clone()).unwrap();
        let out = syzygy_sequence(&ses, 0);
        out.validate().unwrap();
        // Z projective: the cover part is trivial, so the shift splits
        assert!(out.x().is_zero());
        assert!(out.splits());
    }

    #[test]
    fn split_sequence_shift_decomposes_as_identity_plus_cover() {
        let a = a3_sink();
        let m = projective(&a, 2);
        let n = simple(&a, 0);
        let (_, injs, projs) = direct_sum(&[&m, &n]);
        let ses = Ses::new(injs[0].clone(), projs[1].clone()).unwrap();
        let out = syzygy_sequence(&ses, 0);
        out.validate().unwrap();
        // left = Omega S(1) = S(2); middle = P(3) (+) P(1)
        assert_eq!(out.x().dims, vec![0, 1, 0]);
        assert_eq!(out.y().dims, vec![1, 2, 1]);
    }
}
