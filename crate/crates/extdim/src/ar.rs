//! Auslander-Reiten theory: the translate as dual-of-transpose, almost
//! split sequences from the socle of Ext^1(M, tau M), knitting, and node
//! detection.

use crate::algebra::{AlgElt, PathAlgebra};
use crate::decomp::{decompose, end_algebra_of, indec_isomorphic, is_indecomposable, Indec};
use crate::fdalg::FdAlgebra;
use crate::matrix::Mat;
use crate::rep::{
    cokernel, direct_sum, dual, hom_space, injective, is_injective_module, is_projective, kernel,
    projective, projective_cover_sum, proj_basis, simple, ProjSum, Rep, RepMap, Ses,
};
use crate::scalar::Scalar;
use crate::util::{par_map, Budget, Completion, ExecMode};
use serde::Serialize;
use std::sync::Arc;

/// Minimal projective presentation P1 -> P0 -> M -> 0 with summand data.
pub struct Presentation {
    pub cover: RepMap,
    pub ps0: ProjSum,
    pub d1: RepMap,
    pub ps1: ProjSum,
}

pub fn presentation(m: &Rep) -> Presentation {
    let (ps0, cover) = projective_cover_sum(m);
    let (_omega, inc) = kernel(&cover);
    let (ps1, cover1) = projective_cover_sum(&inc.source);
    let d1 = cover1.then(&inc);
    Presentation { cover, ps0, d1, ps1 }
}

/// Algebra-element components of a map between projective sums:
/// out[a][b] is the element describing the component from source summand b
/// into target summand a (supported on paths target_vertex -> source_vertex).
pub fn proj_map_components(
    src: &ProjSum,
    tgt: &ProjSum,
    d: &RepMap,
) -> Vec<Vec<AlgElt>> {
    let alg = &src.alg;
    let mut out = vec![vec![AlgElt::zero(); src.summands.len()]; tgt.summands.len()];
    for (b, &w) in src.summands.iter().enumerate() {
        let gen_col = src.generator_col(b);
        let col = d.mats[w].col(gen_col);
        for (a, &u) in tgt.summands.iter().enumerate() {
            let pbu = proj_basis(alg, u);
            let rows = tgt.block_cols(a, w);
            let mut terms = Vec::new();
            for (slot, row) in rows.clone().enumerate() {
                let c = col[row].clone();
                if !c.is_zero() {
                    terms.push((pbu[w][slot], c));
                }
            }
            out[a][b] = AlgElt::from_terms(terms);
        }
    }
    out
}

/// The transpose Tr M over the opposite algebra, from a minimal projective
/// presentation.
pub fn transpose(m: &Rep) -> Rep {
    let alg = &m.algebra;
    let op = alg.opposite();
    let pres = presentation(m);
    let comps = proj_map_components(&pres.ps1, &pres.ps0, &pres.d1);
    // dual presentation: P0* -> P1* over op, component (b, a) = reversed x_ab
    let src_op = ProjSum::new(&op, pres.ps0.summands.clone());
    let tgt_op = ProjSum::new(&op, pres.ps1.summands.clone());
    let mut gens: Vec<Vec<Scalar>> = Vec::with_capacity(src_op.summands.len());
    for (a, &u) in src_op.summands.iter().enumerate() {
        // generator of P^op(u) maps to the sum over b of rev(x_ab) in block b
        let mut g = vec![op.field.zero(); tgt_op.rep.dims[u]];
        for (b, &w) in tgt_op.summands.iter().enumerate() {
            let x = &comps[a][b];
            let pb_op = proj_basis(&op, w);
            for (idx, c) in &x.terms {
                let rev = alg.path_reversed(&alg.basis[*idx]);
                let red = op.reduce_path(&rev);
                for (ri, rc) in &red.terms {
                    let slot = pb_op[u]
                        .iter()
                        .position(|&k| k == *ri)
                        .expect("reversed path lives in P^op(w) at u");
                    let col = tgt_op.block_cols(b, u).start + slot;
                    g[col] = g[col].add(&c.mul(rc));
                }
            }
        }
        gens.push(g);
    }
    let dstar = src_op.map_from(&tgt_op.rep, &gens);
    cokernel(&dstar).0
}

/// Auslander-Reiten translate tau = D Tr.
pub fn tau(m: &Rep) -> Rep {
    let op = m.algebra.opposite();
    let tr = transpose(m);
    debug_assert!(Arc::ptr_eq(&tr.algebra, &op));
    dual(&tr, &m.algebra)
}

/// Inverse translate tau^{-1} = Tr D.
pub fn tau_inverse(m: &Rep) -> Rep {
    let op = m.algebra.opposite();
    let dm = dual(m, &op);
    transpose(&dm)
}

/// Data for Ext^1(M, N) from a presentation of M.
struct Ext1 {
    pres: Presentation,
    /// Hom(P1, N) basis.
    h1: Vec<RepMap>,
    /// Columns: coordinates (in h1) of a basis of the cocycle space.
    cocycles: Mat,
    /// Columns: coordinates (in h1) of the coboundaries.
    coboundaries: Mat,
    /// Chosen complement columns representing Ext classes (inside cocycles).
    classes: Mat,
}

fn ext1_data(m: &Rep, n: &Rep) -> Ext1 {
    let f = m.algebra.field;
    let pres = presentation(m);
    // next stage for the cocycle condition
    let (_omega2, inc2) = kernel(&pres.d1);
    let (ps2, cover2) = projective_cover_sum(&inc2.source);
    let d2 = cover2.then(&inc2);
    let _ = ps2;
    let h1 = hom_space(&pres.ps1.rep, n);
    let h2 = hom_space(&d2.source, n);
    let h0 = hom_space(&pres.ps0.rep, n);
    // cocycles: g with d2 then g = 0
    let rows_len = h2.len();
    let cze = if h1.is_empty() {
        Mat::zero(f, rows_len.max(1), 0)
    } else {
        Mat::from_fn(f, rows_len.max(1), h1.len(), |i, j| {
            if rows_len == 0 {
                return f.zero();
            }
            let comp = d2.then(&h1[j]);
            let coords = crate::rep::hom_coords(&h2, &comp).expect("composite lies in hom space");
            coords[i].clone()
        })
    };
    let cocycles = cze.kernel();
    // coboundaries: d1 then f for f in h0, coordinates in h1
    let cob_cols: Vec<Vec<Scalar>> = h0
        .iter()
        .map(|f0| {
            let comp = pres.d1.then(f0);
            crate::rep::hom_coords(&h1, &comp).expect("coboundary lies in hom space")
        })
        .collect();
    let coboundaries = if h1.is_empty() {
        Mat::zero(f, 0, 0)
    } else {
        Mat::from_fn(f, h1.len(), cob_cols.len(), |i, j| cob_cols[j][i].clone())
    };
    // complement of coboundaries inside cocycles
    let classes = {
        let mut span = coboundaries.image();
        let mut picked: Vec<usize> = Vec::new();
        for c in 0..cocycles.cols {
            let col = cocycles.col(c);
            if !crate::matrix::subspace::contains(&span, &col) {
                let cm = Mat::from_fn(f, col.len(), 1, |i, _| col[i].clone());
                span = span.hcat(&cm);
                picked.push(c);
            }
        }
        let all: Vec<usize> = (0..cocycles.rows).collect();
        cocycles.submatrix(&all, &picked)
    };
    Ext1 { pres, h1, cocycles, coboundaries, classes }
}

pub fn ext_dim(m: &Rep, n: &Rep, k: usize) -> usize {
    assert!(k >= 1);
    if k == 1 {
        let e = ext1_data(m, n);
        return e.classes.cols;
    }
    // Ext^k(M, N) = Ext^1(Omega^{k-1} M, N) for k >= 1 over any algebra
    let shifted = crate::rep::syzygy(m, (k - 1) as i64);
    if shifted.is_zero() {
        return 0;
    }
    let e = ext1_data(&shifted, n);
    e.classes.cols
}

/// Materialize the extension 0 -> N -> E -> M -> 0 from a cocycle
/// g: P1 -> N (with g . d2 = 0), by pushout along the presentation.
fn realize_extension(pres: &Presentation, n: &Rep, g: &RepMap) -> Ses {
    let f = n.algebra.field;
    // E = coker(P1 -> N (+) P0), x |-> (g x, -d1 x)
    let (sum, injs, _projs) = direct_sum(&[n, &pres.ps0.rep]);
    let mut comb_mats = Vec::with_capacity(sum.dims.len());
    for v in 0..sum.dims.len() {
        let top = g.mats[v].clone();
        let bottom = pres.d1.mats[v].neg();
        comb_mats.push(top.vcat(&bottom));
    }
    let comb = RepMap { source: pres.ps1.rep.clone(), target: sum.clone(), mats: comb_mats };
    debug_assert!(comb.check_intertwining().is_ok());
    let (e, q) = cokernel(&comb);
    // N -> E
    let iota = injs[0].then(&q);
    // E -> M: induced by (0 | cover): solve H q = w
    let mut wm = Vec::with_capacity(sum.dims.len());
    for v in 0..sum.dims.len() {
        // w on N part = 0, on P0 part = cover
        let zero = Mat::zero(f, pres.cover.mats[v].rows, n.dims[v]);
        wm.push(zero.hcat(&pres.cover.mats[v]));
    }
    let mut h_mats = Vec::with_capacity(sum.dims.len());
    for v in 0..sum.dims.len() {
        // solve H * q_v = w_v, i.e. q_v^T H^T = w_v^T
        let ht = q.mats[v].transpose().solve_mat(&wm[v].transpose()).expect("factors through");
        h_mats.push(ht.transpose());
    }
    let pi = RepMap { source: e.clone(), target: pres.cover.target.clone(), mats: h_mats };
    debug_assert!(pi.check_intertwining().is_ok());
    Ses::new(iota, pi).expect("pushout of a cocycle is exact")
}

/// The almost split sequence 0 -> tau M -> E -> M -> 0 ending at an
/// indecomposable non-projective M: a nonzero class in the End(M)-socle of
/// Ext^1(M, tau M).
pub fn almost_split_ending_at(m: &Rep, seed: u64) -> Result<Ses, String> {
    if is_projective(m) {
        return Err("module is projective; no almost split sequence ends at it".into());
    }
    if is_indecomposable(m, seed) == Indec::No {
        return Err("module is decomposable".into());
    }
    let tm = tau(m);
    let e = ext1_data(m, &tm);
    if e.classes.cols == 0 {
        return Err("Ext^1(M, tau M) vanished; translation machinery is inconsistent".into());
    }
    let f = m.algebra.field;
    // End(M) radical action on Ext classes
    let (ends, fd) = end_algebra_of(m).ok_or("zero module")?;
    let rad = fd.radical();
    let mut socle_constraints: Vec<Mat> = Vec::new();
    for r in 0..rad.cols {
        let coords = rad.col(r);
        let mut endo = RepMap::zero(m, m);
        for (c, b) in coords.iter().zip(ends.iter()) {
            endo = endo.add(&b.scale(c));
        }
        socle_constraints.push(ext_action_matrix(&e, &tm, &endo));
    }
    // socle of the Ext module: intersect kernels
    let mut socle = Mat::identity(f, e.classes.cols);
    for c in &socle_constraints {
        let stacked = c.mul(&socle);
        let k = stacked.kernel();
        socle = socle.mul(&k).image();
    }
    if socle.cols == 0 {
        return Err("Ext socle computation returned zero".into());
    }
    let xi = socle.col(0);
    // cocycle = classes * xi in h1 coordinates
    let class_coords = e.classes.apply(&xi);
    let mut g = RepMap::zero(&e.pres.ps1.rep, &tm);
    for (c, h) in class_coords.iter().zip(e.h1.iter()) {
        g = g.add(&h.scale(c));
    }
    let ses = realize_extension(&e.pres, &tm, &g);
    if ses.splits() {
        return Err("selected socle class produced a split sequence".into());
    }
    Ok(ses)
}

/// Matrix of the action of an endomorphism of M on the Ext class space.
fn ext_action_matrix(e: &Ext1, n: &Rep, endo: &RepMap) -> Mat {
    let f = n.algebra.field;
    // lift endo through the presentation
    let pres = &e.pres;
    let lift0 = crate::rep::lift_projective(&pres.ps0, &pres.cover.then(endo), &pres.cover);
    // d1 then lift0 factors through ker(cover) = im(d1); corestrict and lift
    let (img, inc_img, surj_img) = crate::rep::image(&pres.d1);
    let comp = pres.d1.then(&lift0);
    // comp lands in im(d1): coordinates via inc
    let mut comp_in_img_mats = Vec::new();
    for v in 0..comp.mats.len() {
        comp_in_img_mats
            .push(inc_img.mats[v].solve_mat(&comp.mats[v]).expect("composite lands in the image"));
    }
    let comp_in_img = RepMap { source: pres.ps1.rep.clone(), target: img.clone(), mats: comp_in_img_mats };
    let lift1 = crate::rep::lift_projective(&pres.ps1, &comp_in_img, &surj_img);
    // action on a class column: g  |->  lift1 then g
    let mut cols = Vec::new();
    for c in 0..e.classes.cols {
        let coords = e.classes.col(c);
        let mut g = RepMap::zero(&pres.ps1.rep, n);
        for (cc, h) in coords.iter().zip(e.h1.iter()) {
            g = g.add(&h.scale(cc));
        }
        let acted = lift1.then(&g);
        let acted_coords =
            crate::rep::hom_coords(&e.h1, &acted).expect("acted cocycle lies in hom space");
        // reduce modulo coboundaries to class coordinates
        cols.push(class_coordinates(e, &acted_coords));
    }
    Mat::from_fn(f, e.classes.cols, e.classes.cols, |i, j| cols[j][i].clone())
}

/// Coordinates of a cocycle (given in h1-coordinates) in the chosen class
/// representatives modulo coboundaries.
fn class_coordinates(e: &Ext1, h1_coords: &[Scalar]) -> Vec<Scalar> {
    let f = if e.classes.cols > 0 { e.classes.field } else { e.coboundaries.field };
    // solve [classes | coboundaries] * (y; x) = v
    let sys = e.classes.hcat(&e.coboundaries.image());
    let sol = sys.solve(h1_coords).expect("cocycle decomposes into class + coboundary");
    let _ = f;
    sol[..e.classes.cols].to_vec()
}

/// A node of the AR quiver.
#[derive(Clone)]
pub struct ArNode {
    pub rep: Rep,
    pub projective: bool,
    pub injective: bool,
    pub flagged: bool,
}

/// A mesh: the almost split sequence starting at `start` and ending at
/// `end`, with middle summand multiplicities by node id.
#[derive(Clone, Debug, Serialize)]
pub struct Mesh {
    pub start: usize,
    pub end: usize,
    pub middle: Vec<(usize, usize)>,
}

pub struct ArQuiver {
    pub algebra: Arc<PathAlgebra>,
    pub nodes: Vec<ArNode>,
    /// tau_links[i] = Some(j) when tau(node i) = node j.
    pub tau_links: Vec<Option<usize>>,
    pub meshes: Vec<Mesh>,
    pub status: Completion,
    pub steps_used: usize,
}

impl ArQuiver {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_complete(&self) -> bool {
        self.status.is_complete()
    }

    pub fn dim_vectors(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.nodes.iter().map(|n| n.rep.dims.clone()).collect();
        v.sort();
        v
    }

    /// Locate a node isomorphic to the given indecomposable.
    pub fn find_node(&self, m: &Rep) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n.rep.dims == m.dims && indec_isomorphic(&n.rep, m).is_some())
    }
}

/// Breadth-first knitting closure from the projectives.
pub fn knit(alg: &Arc<PathAlgebra>, budget: Budget, seed: u64, mode: ExecMode) -> ArQuiver {
    let nv = alg.quiver.num_vertices();
    let mut nodes: Vec<ArNode> = Vec::new();
    let mut tau_links: Vec<Option<usize>> = Vec::new();
    let mut meshes: Vec<Mesh> = Vec::new();
    let mut status = Completion::Complete;
    let mut steps = 0usize;

    let add_node = |nodes: &mut Vec<ArNode>, tau_links: &mut Vec<Option<usize>>, rep: Rep, flagged: bool| -> usize {
        for (i, n) in nodes.iter().enumerate() {
            if n.rep.dims == rep.dims && indec_isomorphic(&n.rep, &rep).is_some() {
                return i;
            }
        }
        let projective = is_projective(&rep);
        let injective = is_injective_module(&rep);
        nodes.push(ArNode { rep, projective, injective, flagged });
        tau_links.push(None);
        nodes.len() - 1
    };

    for i in 0..nv {
        let p = projective(alg, i);
        add_node(&mut nodes, &mut tau_links, p, false);
    }

    // frontier: node ids whose forward mesh has not been processed
    let mut processed = vec![false; nodes.len()];
    loop {
        let frontier: Vec<usize> = (0..nodes.len())
            .filter(|&i| !processed.get(i).copied().unwrap_or(false) && !nodes[i].injective)
            .collect();
        if frontier.is_empty() {
            break;
        }
        if steps + frontier.len() > budget.max_steps {
            status = Completion::BudgetExhausted;
            break;
        }
        steps += frontier.len();
        // expand each frontier node independently, then merge in order
        let inputs: Vec<Rep> = frontier.iter().map(|&i| nodes[i].rep.clone()).collect();
        let expansions = par_map(mode, inputs, |m| {
            let next = tau_inverse(&m);
            if next.is_zero() {
                return Err("tau-inverse vanished on a non-injective module".to_string());
            }
            let ses = almost_split_ending_at(&next, seed)?;
            Ok((next, ses))
        });
        let mut exhausted = false;
        for (&fid, exp) in frontier.iter().zip(expansions.into_iter()) {
            processed[fid] = true;
            let (next, ses) = match exp {
                Ok(x) => x,
                Err(e) => panic!("knitting step failed: {e}"),
            };
            if next.total_dim() > budget.max_dim {
                exhausted = true;
                continue;
            }
            let dec = decompose(ses.y(), seed);
            if dec.summands.iter().any(|s| s.rep.total_dim() > budget.max_dim) {
                exhausted = true;
                continue;
            }
            let end_id = add_node(&mut nodes, &mut tau_links, next, false);
            tau_links[end_id] = Some(fid);
            let mut middle = Vec::new();
            for s in &dec.summands {
                let mid = add_node(&mut nodes, &mut tau_links, s.rep.clone(), s.local_nonsplit);
                middle.push((mid, s.multiplicity));
            }
            meshes.push(Mesh { start: fid, end: end_id, middle });
            while processed.len() < nodes.len() {
                processed.push(false);
            }
        }
        if exhausted {
            status = Completion::BudgetExhausted;
            break;
        }
    }

    // completeness also requires every injective to be present
    if status.is_complete() {
        for i in 0..nv {
            let inj = injective(alg, i);
            let found = nodes
                .iter()
                .any(|n| n.rep.dims == inj.dims && indec_isomorphic(&n.rep, &inj).is_some());
            if !found {
                status = Completion::BudgetExhausted;
            }
        }
    }

    ArQuiver { algebra: alg.clone(), nodes, tau_links, meshes, status, steps_used: steps }
}

/// Representation-finiteness report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RepFinite {
    Yes,
    No,
    Unknown,
}

/// Knitting certifies "yes"; a hereditary algebra with a non-Dynkin
/// connected component certifies "no"; anything else is unknown.
pub fn is_representation_finite(
    alg: &Arc<PathAlgebra>,
    budget: Budget,
    seed: u64,
    mode: ExecMode,
) -> (RepFinite, Option<ArQuiver>) {
    if alg.relations.is_empty() {
        // hereditary: Gabriel route
        let class = crate::quiver::classify_graph(&alg.quiver);
        if alg.quiver.is_connected() && !class.is_dynkin() {
            return (RepFinite::No, None);
        }
    }
    let ar = knit(alg, budget, seed, mode);
    if ar.is_complete() {
        (RepFinite::Yes, Some(ar))
    } else if alg.relations.is_empty() {
        let class = crate::quiver::classify_graph(&alg.quiver);
        if alg.quiver.is_connected() && !class.is_dynkin() {
            (RepFinite::No, Some(ar))
        } else {
            (RepFinite::Unknown, Some(ar))
        }
    } else {
        (RepFinite::Unknown, Some(ar))
    }
}

/// A detected node: simple, neither projective nor injective, almost split
/// sequence starting there has projective middle term.
pub struct NodeReport {
    /// (vertex, the witnessing sequence 0 -> S -> E -> tau^{-1} S -> 0).
    pub nodes: Vec<(usize, Ses)>,
    /// Simples examined but rejected.
    pub examined: usize,
}

pub fn find_nodes(alg: &Arc<PathAlgebra>, seed: u64) -> NodeReport {
    let mut nodes = Vec::new();
    let mut examined = 0;
    for i in 0..alg.quiver.num_vertices() {
        let s = simple(alg, i);
        if is_projective(&s) || is_injective_module(&s) {
            continue;
        }
        examined += 1;
        let next = tau_inverse(&s);
        let ses = almost_split_ending_at(&next, seed)
            .expect("tau-inverse of a non-injective simple supports an almost split sequence");
        if is_projective(ses.y()) {
            nodes.push((i, ses));
        }
    }
    NodeReport { nodes, examined }
}

/// JSON export of an AR quiver.
#[derive(Serialize)]
pub struct ArQuiverJson {
    pub status: String,
    pub nodes: Vec<ArNodeJson>,
    pub tau_links: Vec<Option<usize>>,
    pub meshes: Vec<Mesh>,
}

#[derive(Serialize)]
pub struct ArNodeJson {
    pub id: usize,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    pub flagged: bool,
}

impl ArQuiver {
    pub fn to_json(&self) -> ArQuiverJson {
        ArQuiverJson {
            status: if self.is_complete() { "complete".into() } else { "budget-exhausted".into() },
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| ArNodeJson {
                    id,
                    dims: n.rep.dims.clone(),
                    projective: n.projective,
                    injective: n.injective,
                    flagged: n.flagged,
                })
                .collect(),
            tau_links: self.tau_links.clone(),
            meshes: self.meshes.clone(),
        }
    }

    /// Graphviz dot output for external renderers.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ar {\n  rankdir=LR;\n");
        for (id, n) in self.nodes.iter().enumerate() {
            let dims: Vec<String> = n.rep.dims.iter().map(|d| d.to_string()).collect();
            let shape = if n.projective || n.injective { "box" } else { "ellipse" };
            out.push_str(&format!(
                "  n{id} [label=\"({})\" shape={shape}];\n",
                dims.join(",")
            ));
        }
        for mesh in &self.meshes {
            for (mid, mult) in &mesh.middle {
                for _ in 0..*mult {
                    out.push_str(&format!("  n{} -> n{};\n", mesh.start, mid));
                    out.push_str(&format!("  n{} -> n{};\n", mid, mesh.end));
                }
            }
        }
        for (i, t) in self.tau_links.iter().enumerate() {
            if let Some(j) = t {
                out.push_str(&format!("  n{i} -> n{j} [style=dashed, constraint=false];\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Used by knitting internals and exposed for the end-algebra machinery.
pub fn end_fdalgebra(m: &Rep) -> Option<FdAlgebra> {
    end_algebra_of(m).map(|(_, fd)| fd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_algebra;
    use crate::util::ExecMode;

    fn a3_sink() -> Arc<PathAlgebra> {
        parse_algebra("field Q\nvertex 1 2 3\narrow al : 1 -> 2\narrow be : 3 -> 2\n").unwrap()
    }

    #[test]
    fn tau_of_projective_vanishes() {
        let a = a3_sink();
        for i in 0..3 {
            assert!(tau(&projective(&a, i)).is_zero());
        }
    }

    #[test]
    fn tau_of_s3_is_p1() {
        // the dashed arrow S(3) --> 1/2 in the three-vertex example
        let a = a3_sink();
        let t = tau(&simple(&a, 2));
        assert_eq!(t.dims, vec![1, 1, 0]);
        assert!(indec_isomorphic(&t, &projective(&a, 0)).is_some());
    }

    #[test]
    fn tau_inverse_of_tau_recovers_nonprojectives() {
        let a = a3_sink();
        let s3 = simple(&a, 2);
        let roundtrip = tau_inverse(&tau(&s3));
        assert!(indec_isomorphic(&roundtrip, &s3).is_some());
        let i2 = injective(&a, 1);
        let rt = tau_inverse(&tau(&i2));
        assert!(indec_isomorphic(&rt, &i2).is_some());
    }

    #[test]
    fn ext_dimensions() {
        let a = a3_sink();
        // one arrow 1 -> 2 gives Ext^1(S(1), S(2)) = k
        assert_eq!(ext_dim(&simple(&a, 0), &simple(&a, 1), 1), 1);
        assert_eq!(ext_dim(&simple(&a, 0), &simple(&a, 2), 1), 0);
        // projectives have no extensions
        assert_eq!(ext_dim(&projective(&a, 0), &simple(&a, 1), 1), 0);
        // hereditary: Ext^2 = 0
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(ext_dim(&simple(&a, i), &simple(&a, j), 2), 0);
            }
        }
    }

    #[test]
    fn almost_split_sequence_for_s2_dual() {
        let a = a3_sink();
        // sequence ending at I(2): 0 -> S(2) -> P(1) (+) P(3) -> I(2) -> 0
        let i2 = injective(&a, 1);
        let ses = almost_split_ending_at(&i2, 0).unwrap();
        assert_eq!(ses.x().dims, vec![0, 1, 0]);
        assert_eq!(ses.y().dims, vec![1, 2, 1]);
        assert!(!ses.splits());
        // middle is P(1) (+) P(3)
        let dec = decompose(ses.y(), 0);
        assert_eq!(dec.total_summands(), 2);
    }

    #[test]
    fn almost_split_rejects_projectives() {
        let a = a3_sink();
        assert!(almost_split_ending_at(&projective(&a, 0), 0).is_err());
    }

    #[test]
    fn knit_a3_has_six_nodes() {
        let a = a3_sink();
        let ar = knit(&a, Budget::default(), 0, ExecMode::Sequential);
        assert!(ar.is_complete());
        assert_eq!(ar.node_count(), 6);
        let mut dims = ar.dim_vectors();
        dims.sort();
        let want = vec![
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 0, 0],
            vec![1, 1, 0],
            vec![1, 1, 1],
        ];
        assert_eq!(dims, want);
        // meshes = nodes - projectives
        let nproj = ar.nodes.iter().filter(|n| n.projective).count();
        assert_eq!(ar.meshes.len(), ar.node_count() - nproj);
    }

    #[test]
    fn knit_parallel_matches_sequential() {
        let a = a3_sink();
        let seq = knit(&a, Budget::default(), 0, ExecMode::Sequential);
        let par = knit(&a, Budget::default(), 0, ExecMode::Parallel);
        assert_eq!(seq.dim_vectors(), par.dim_vectors());
        assert_eq!(seq.meshes.len(), par.meshes.len());
    }

    #[test]
    fn kronecker_knitting_exhausts_budget() {
        let a = parse_algebra(
            "field Q\nvertex 1 2\narrow x : 1 -> 2\narrow y : 1 -> 2\n",
        )
        .unwrap();
        let ar = knit(&a, Budget { max_dim: 12, max_steps: 24 }, 0, ExecMode::Sequential);
        assert!(!ar.is_complete());
        assert!(ar.node_count() >= 5);
    }

    #[test]
    fn rep_finiteness_certificates() {
        let a3 = a3_sink();
        let (r, _) = is_representation_finite(&a3, Budget::default(), 0, ExecMode::Sequential);
        assert_eq!(r, RepFinite::Yes);
        let kron = parse_algebra("field Q\nvertex 1 2\narrow x : 1 -> 2\narrow y : 1 -> 2\n")
            .unwrap();
        let (r, _) = is_representation_finite(&kron, Budget { max_dim: 8, max_steps: 8 }, 0, ExecMode::Sequential);
        assert_eq!(r, RepFinite::No);
    }

    #[test]
    fn semisimple_has_no_nodes() {
        let a = parse_algebra("field Q\nvertex 1 2\n").unwrap();
        let report = find_nodes(&a, 0);
        assert!(report.nodes.is_empty());
        assert_eq!(report.examined, 0);
    }

    #[test]
    fn hereditary_a3_has_no_nodes() {
        let a = a3_sink();
        let report = find_nodes(&a, 0);
        assert!(report.nodes.is_empty());
        // every simple here is projective or injective
        assert_eq!(report.examined, 0);
    }
}
