//! Explicit representations of simply-laced acyclic quivers over exact
//! rationals: projectives, injectives and simples with path bases, hom and
//! extension spaces by the two-term complex, reflection functors on objects
//! and morphisms, the translate as a fixed composite of reflections, and the
//! indecomposable catalog for Dynkin quivers keyed by dimension vector.

use crate::linalg::{QMat, QuotientSpace, Rat};
use crate::quiver::ValuedQuiver;
use crate::roots::RootVec;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("quiver is not simply laced")]
    NotSimplyLaced,
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("vertex {0} is not a {1} of the quiver")]
    WrongVertexClass(usize, &'static str),
    #[error("quiver is not of finite (Dynkin) type")]
    NotFiniteType,
    #[error("catalog keys do not match the positive roots")]
    CatalogMismatch,
}

/// A representation: one rational vector space per vertex and one matrix per
/// arrow, of shape `dim(target) x dim(source)`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub quiver: Arc<ValuedQuiver>,
    pub dims: Vec<usize>,
    pub mats: Vec<QMat>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.dims)
    }
}

impl Representation {
    pub fn zero(quiver: Arc<ValuedQuiver>) -> Self {
        let n = quiver.rank();
        let mats = quiver.arrows().iter().map(|_| QMat::zeros(0, 0)).collect();
        Representation { quiver, dims: vec![0; n], mats }
    }

    pub fn new(quiver: Arc<ValuedQuiver>, dims: Vec<usize>, mats: Vec<QMat>) -> Self {
        assert_eq!(dims.len(), quiver.rank());
        assert_eq!(mats.len(), quiver.arrows().len());
        for (a, m) in quiver.arrows().iter().zip(&mats) {
            assert_eq!(m.rows(), dims[a.to], "arrow matrix rows");
            assert_eq!(m.cols(), dims[a.from], "arrow matrix cols");
        }
        Representation { quiver, dims, mats }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn dim_vector(&self) -> RootVec {
        RootVec(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// A morphism of representations: one block per vertex, intertwining the
/// arrow matrices.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismMatrix {
    pub source: Arc<Representation>,
    pub target: Arc<Representation>,
    pub blocks: Vec<QMat>,
}

impl fmt::Debug for MorphismMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor({:?} -> {:?})", self.source.dims, self.target.dims)
    }
}

impl MorphismMatrix {
    pub fn zero(source: Arc<Representation>, target: Arc<Representation>) -> Self {
        let blocks = (0..source.quiver.rank())
            .map(|i| QMat::zeros(target.dims[i], source.dims[i]))
            .collect();
        MorphismMatrix { source, target, blocks }
    }

    pub fn identity(rep: Arc<Representation>) -> Self {
        let blocks = rep.dims.iter().map(|&d| QMat::identity(d)).collect();
        MorphismMatrix { source: rep.clone(), target: rep, blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(QMat::is_zero)
    }

    pub fn intertwines(&self) -> bool {
        self.source.quiver.arrows().iter().enumerate().all(|(idx, a)| {
            let lhs = self.blocks[a.to].mul(&self.source.mats[idx]);
            let rhs = self.target.mats[idx].mul(&self.blocks[a.from]);
            lhs == rhs
        })
    }

    /// Composition `other . self` (this morphism applied first).
    pub fn then(&self, other: &MorphismMatrix) -> MorphismMatrix {
        assert_eq!(self.target.dims, other.source.dims, "composition endpoint mismatch");
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(f, g)| g.mul(f))
            .collect();
        MorphismMatrix { source: self.source.clone(), target: other.target.clone(), blocks }
    }

    pub fn add(&self, other: &MorphismMatrix) -> MorphismMatrix {
        let blocks =
            self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        MorphismMatrix { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, s: &Rat) -> MorphismMatrix {
        let blocks = self.blocks.iter().map(|b| b.scale(s)).collect();
        MorphismMatrix { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    fn flatten(&self) -> Vec<Rat> {
        self.blocks.iter().flat_map(|b| b.flatten()).collect()
    }
}

/// Presentation of `Ext^1(X, Y)` as the cokernel of the difference map from
/// vertex blocks to arrow blocks. Cochains are one matrix per arrow `i -> j`
/// of shape `dim Y_j x dim X_i`; classes are taken modulo the image.
#[derive(Clone, Debug)]
pub struct ExtPresentation {
    pub source: Arc<Representation>,
    pub target: Arc<Representation>,
    quotient: QuotientSpace,
    arrow_shapes: Vec<(usize, usize)>,
}

/// A cochain representing an extension class.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtCochain {
    pub source: Arc<Representation>,
    pub target: Arc<Representation>,
    pub blocks: Vec<QMat>,
}

impl fmt::Debug for ExtCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ext({:?} ~> {:?})", self.source.dims, self.target.dims)
    }
}

impl ExtCochain {
    pub fn zero(source: Arc<Representation>, target: Arc<Representation>) -> Self {
        let blocks = source
            .quiver
            .arrows()
            .iter()
            .map(|a| QMat::zeros(target.dims[a.to], source.dims[a.from]))
            .collect();
        ExtCochain { source, target, blocks }
    }

    /// Precompose with a morphism into the cochain's source.
    pub fn precompose(&self, f: &MorphismMatrix) -> ExtCochain {
        assert_eq!(f.target.dims, self.source.dims);
        let blocks = self
            .source
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(idx, a)| self.blocks[idx].mul(&f.blocks[a.from]))
            .collect();
        ExtCochain { source: f.source.clone(), target: self.target.clone(), blocks }
    }

    /// Postcompose with a morphism out of the cochain's target.
    pub fn postcompose(&self, g: &MorphismMatrix) -> ExtCochain {
        assert_eq!(self.target.dims, g.source.dims);
        let blocks = self
            .source
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(idx, a)| g.blocks[a.to].mul(&self.blocks[idx]))
            .collect();
        ExtCochain { source: self.source.clone(), target: g.target.clone(), blocks }
    }

    pub fn add(&self, other: &ExtCochain) -> ExtCochain {
        let blocks =
            self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        ExtCochain { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, s: &Rat) -> ExtCochain {
        let blocks = self.blocks.iter().map(|b| b.scale(s)).collect();
        ExtCochain { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    fn flatten(&self) -> Vec<Rat> {
        self.blocks.iter().flat_map(|b| b.flatten()).collect()
    }
}

impl ExtPresentation {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Canonical coordinates of a cochain's class.
    pub fn coords(&self, cochain: &ExtCochain) -> Vec<Rat> {
        self.quotient.reduce(&cochain.flatten())
    }

    pub fn is_coboundary(&self, cochain: &ExtCochain) -> bool {
        self.coords(cochain).iter().all(Rat::is_zero)
    }

    /// Canonical basis cochains, lifting the quotient coordinates.
    pub fn basis(&self) -> Vec<ExtCochain> {
        (0..self.dim())
            .map(|k| {
                let flat = self.quotient.lift(k);
                self.unflatten(&flat)
            })
            .collect()
    }

    fn unflatten(&self, flat: &[Rat]) -> ExtCochain {
        let mut blocks = Vec::with_capacity(self.arrow_shapes.len());
        let mut pos = 0;
        for &(r, c) in &self.arrow_shapes {
            let mut m = QMat::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, flat[pos].clone());
                    pos += 1;
                }
            }
            blocks.push(m);
        }
        ExtCochain { source: self.source.clone(), target: self.target.clone(), blocks }
    }
}

/// Hom and Ext of a pair of representations over the same quiver.
pub struct HomExt {
    pub hom: Vec<MorphismMatrix>,
    pub ext: ExtPresentation,
}

impl HomExt {
    pub fn dim_hom(&self) -> usize {
        self.hom.len()
    }

    pub fn dim_ext(&self) -> usize {
        self.ext.dim()
    }

    /// Coordinates of a morphism in the computed hom basis.
    pub fn hom_coords(&self, f: &MorphismMatrix) -> Vec<Rat> {
        if self.hom.is_empty() {
            assert!(f.is_zero(), "nonzero morphism in zero hom space");
            return Vec::new();
        }
        let rows = self.hom[0].flatten().len();
        let mut basis = QMat::zeros(rows, self.hom.len());
        for (c, b) in self.hom.iter().enumerate() {
            for (r, v) in b.flatten().into_iter().enumerate() {
                basis.set(r, c, v);
            }
        }
        let mut rhs = QMat::zeros(rows, 1);
        for (r, v) in f.flatten().into_iter().enumerate() {
            rhs.set(r, 0, v);
        }
        let sol = basis.solve(&rhs).expect("morphism not in hom space");
        sol.column(0)
    }
}

/// Build the difference map `d(phi)_a = phi_j x_a - y_a phi_i` for
/// `a: i -> j` as a matrix from vertex-block to arrow-block coordinates.
fn difference_matrix(x: &Representation, y: &Representation) -> QMat {
    let q = &x.quiver;
    let vertex_dims: Vec<usize> =
        (0..q.rank()).map(|i| y.dims[i] * x.dims[i]).collect();
    let vertex_offsets: Vec<usize> = vertex_dims
        .iter()
        .scan(0, |acc, d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let vertex_total: usize = vertex_dims.iter().sum();
    let arrow_dims: Vec<usize> =
        q.arrows().iter().map(|a| y.dims[a.to] * x.dims[a.from]).collect();
    let arrow_offsets: Vec<usize> = arrow_dims
        .iter()
        .scan(0, |acc, d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let arrow_total: usize = arrow_dims.iter().sum();
    let mut d = QMat::zeros(arrow_total, vertex_total);
    for (idx, a) in q.arrows().iter().enumerate() {
        let (yt, xs) = (y.dims[a.to], x.dims[a.from]);
        for r in 0..yt {
            for c in 0..xs {
                let row = arrow_offsets[idx] + r * xs + c;
                for m in 0..x.dims[a.to] {
                    let coeff = x.mats[idx].get(m, c).clone();
                    if !coeff.is_zero() {
                        let col = vertex_offsets[a.to] + r * x.dims[a.to] + m;
                        let cur = d.get(row, col).clone();
                        d.set(row, col, cur + coeff);
                    }
                }
                for m in 0..y.dims[a.from] {
                    let coeff = y.mats[idx].get(r, m).clone();
                    if !coeff.is_zero() {
                        let col = vertex_offsets[a.from] + m * xs + c;
                        let cur = d.get(row, col).clone();
                        d.set(row, col, cur - coeff);
                    }
                }
            }
        }
    }
    d
}

/// The difference map `d(phi)_a = phi_j x_a - y_a phi_i` for `a: i -> j`,
/// whose kernel is `Hom(X, Y)` and whose cokernel presents `Ext^1(X, Y)`.
pub fn hom_ext(x: &Arc<Representation>, y: &Arc<Representation>) -> Result<HomExt, RepError> {
    if x.quiver != y.quiver {
        return Err(RepError::QuiverMismatch);
    }
    let q = &x.quiver;
    let n = q.rank();
    let vertex_dims: Vec<usize> = (0..n).map(|i| y.dims[i] * x.dims[i]).collect();
    let vertex_total: usize = vertex_dims.iter().sum();
    let vertex_offsets: Vec<usize> = vertex_dims
        .iter()
        .scan(0, |acc, d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let arrow_shapes: Vec<(usize, usize)> =
        q.arrows().iter().map(|a| (y.dims[a.to], x.dims[a.from])).collect();
    let arrow_total: usize = arrow_shapes.iter().map(|&(r, c)| r * c).sum();

    let d = difference_matrix(x, y);
    let kernel = d.kernel_basis();
    let hom = (0..kernel.cols())
        .map(|k| {
            let flat = kernel.column(k);
            let mut blocks = Vec::with_capacity(n);
            for i in 0..n {
                let mut b = QMat::zeros(y.dims[i], x.dims[i]);
                for r in 0..y.dims[i] {
                    for c in 0..x.dims[i] {
                        b.set(r, c, flat[vertex_offsets[i] + r * x.dims[i] + c].clone());
                    }
                }
                blocks.push(b);
            }
            MorphismMatrix { source: x.clone(), target: y.clone(), blocks }
        })
        .collect::<Vec<_>>();
    debug_assert!(hom.iter().all(MorphismMatrix::intertwines));

    let image_rows: Vec<Vec<Rat>> = (0..vertex_total).map(|c| d.column(c)).collect();
    let quotient = QuotientSpace::from_spanning_rows(image_rows, arrow_total);
    let ext = ExtPresentation {
        source: x.clone(),
        target: y.clone(),
        quotient,
        arrow_shapes,
    };
    Ok(HomExt { hom, ext })
}

/// Hom and Ext dimensions only: one rank computation, since both fall out
/// of the rank of the difference map.
pub fn hom_ext_dims(x: &Arc<Representation>, y: &Arc<Representation>) -> Result<(usize, usize), RepError> {
    if x.quiver != y.quiver {
        return Err(RepError::QuiverMismatch);
    }
    let q = &x.quiver;
    let vertex_total: usize = (0..q.rank()).map(|i| y.dims[i] * x.dims[i]).sum();
    let arrow_total: usize =
        q.arrows().iter().map(|a| y.dims[a.to] * x.dims[a.from]).sum();
    let rank = difference_matrix(x, y).rank();
    Ok((vertex_total - rank, arrow_total - rank))
}

fn require_simply_laced(q: &ValuedQuiver) -> Result<(), RepError> {
    if q.is_simply_laced() {
        Ok(())
    } else {
        Err(RepError::NotSimplyLaced)
    }
}

/// Paths out of `start`, grouped by endpoint, in a deterministic order.
fn paths_from(q: &ValuedQuiver, start: usize) -> Vec<Vec<Vec<usize>>> {
    let n = q.rank();
    let mut by_vertex: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(start, Vec::new())];
    while let Some((v, path)) = stack.pop() {
        by_vertex[v].push(path.clone());
        let mut exts: Vec<(usize, Vec<usize>)> = Vec::new();
        for (idx, a) in q.arrows().iter().enumerate() {
            if a.from == v {
                let mut p = path.clone();
                p.push(idx);
                exts.push((a.to, p));
            }
        }
        // Reverse so that lower arrow indices are explored first.
        for e in exts.into_iter().rev() {
            stack.push(e);
        }
    }
    for paths in &mut by_vertex {
        paths.sort();
    }
    by_vertex
}

/// The projective indecomposable at `i`, with basis the paths starting at `i`.
pub fn build_projective(q: &Arc<ValuedQuiver>, i: usize) -> Result<Representation, RepError> {
    require_simply_laced(q)?;
    let paths = paths_from(q, i);
    let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(idx, a)| {
            let mut m = QMat::zeros(dims[a.to], dims[a.from]);
            for (c, p) in paths[a.from].iter().enumerate() {
                let mut extended = p.clone();
                extended.push(idx);
                if let Some(r) = paths[a.to].iter().position(|t| t == &extended) {
                    m.set(r, c, Rat::from_integer(1.into()));
                }
            }
            m
        })
        .collect();
    Ok(Representation::new(q.clone(), dims, mats))
}

/// The injective indecomposable at `i`, with basis the paths ending at `i`;
/// an arrow acts by stripping itself off the front of a path when possible.
pub fn build_injective(q: &Arc<ValuedQuiver>, i: usize) -> Result<Representation, RepError> {
    require_simply_laced(q)?;
    let n = q.rank();
    // paths_to[v] = paths from v to i, as arrow index sequences.
    let mut paths_to: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(i, Vec::new())];
    while let Some((v, path)) = stack.pop() {
        paths_to[v].push(path.clone());
        for (idx, a) in q.arrows().iter().enumerate() {
            if a.to == v {
                let mut p = vec![idx];
                p.extend(path.iter().copied());
                stack.push((a.from, p));
            }
        }
    }
    for paths in &mut paths_to {
        paths.sort();
    }
    let dims: Vec<usize> = paths_to.iter().map(Vec::len).collect();
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(idx, a)| {
            let mut m = QMat::zeros(dims[a.to], dims[a.from]);
            for (c, p) in paths_to[a.from].iter().enumerate() {
                if p.first() == Some(&idx) {
                    let rest: Vec<usize> = p[1..].to_vec();
                    if let Some(r) = paths_to[a.to].iter().position(|t| t == &rest) {
                        m.set(r, c, Rat::from_integer(1.into()));
                    }
                }
            }
            m
        })
        .collect();
    Ok(Representation::new(q.clone(), dims, mats))
}

/// The simple representation at `i`.
pub fn build_simple(q: &Arc<ValuedQuiver>, i: usize) -> Result<Representation, RepError> {
    require_simply_laced(q)?;
    let n = q.rank();
    let mut dims = vec![0usize; n];
    dims[i] = 1;
    let mats = q
        .arrows()
        .iter()
        .map(|a| QMat::zeros(dims[a.to], dims[a.from]))
        .collect();
    Ok(Representation::new(q.clone(), dims, mats))
}

/// Reflection sign: `Plus` is the kernel construction at a sink, `Minus` the
/// cokernel construction at a source.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectSign {
    Plus,
    Minus,
}

/// Apply the reflection functor at vertex `k` to a representation, producing
/// a representation of the reflected quiver.
pub fn reflect_rep(
    k: usize,
    sign: ReflectSign,
    v: &Representation,
) -> Result<Representation, RepError> {
    require_simply_laced(&v.quiver)?;
    let q = &v.quiver;
    let reflected = Arc::new(q.reflect_orientation(k));
    match sign {
        ReflectSign::Plus => {
            if !q.is_sink(k) {
                return Err(RepError::WrongVertexClass(k + 1, "sink"));
            }
            let incoming: Vec<usize> = (0..q.arrows().len())
                .filter(|&idx| q.arrows()[idx].to == k)
                .collect();
            let col_dims: Vec<usize> =
                incoming.iter().map(|&idx| v.dims[q.arrows()[idx].from]).collect();
            let total: usize = col_dims.iter().sum();
            // Assembled map (sum of arrow maps): V_k rows, one block column
            // per incoming arrow.
            let mut assembled = QMat::zeros(v.dims[k], total);
            let mut off = 0;
            for (pos, &idx) in incoming.iter().enumerate() {
                let m = &v.mats[idx];
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        assembled.set(r, off + c, m.get(r, c).clone());
                    }
                }
                off += col_dims[pos];
            }
            let kernel = assembled.kernel_basis();
            let w = kernel.cols();
            let mut dims = v.dims.clone();
            dims[k] = w;
            let mats: Vec<QMat> = reflected
                .arrows()
                .iter()
                .enumerate()
                .map(|(idx, _)| {
                    if let Some(pos) = incoming.iter().position(|&i| i == idx) {
                        // New arrow k -> j: the block of the kernel inclusion.
                        let off: usize = col_dims[..pos].iter().sum();
                        QMat::from_fn(col_dims[pos], w, |r, c| kernel.get(off + r, c).clone())
                    } else {
                        v.mats[idx].clone()
                    }
                })
                .collect();
            Ok(Representation::new(reflected, dims, mats))
        }
        ReflectSign::Minus => {
            if !q.is_source(k) {
                return Err(RepError::WrongVertexClass(k + 1, "source"));
            }
            let outgoing: Vec<usize> = (0..q.arrows().len())
                .filter(|&idx| q.arrows()[idx].from == k)
                .collect();
            let row_dims: Vec<usize> =
                outgoing.iter().map(|&idx| v.dims[q.arrows()[idx].to]).collect();
            let total: usize = row_dims.iter().sum();
            // Assembled map V_k -> direct sum of targets, blocks stacked.
            let mut assembled = QMat::zeros(total, v.dims[k]);
            let mut off = 0;
            for (pos, &idx) in outgoing.iter().enumerate() {
                let m = &v.mats[idx];
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        assembled.set(off + r, c, m.get(r, c).clone());
                    }
                }
                off += row_dims[pos];
            }
            let image_rows: Vec<Vec<Rat>> =
                (0..v.dims[k]).map(|c| assembled.column(c)).collect();
            let quot = QuotientSpace::from_spanning_rows(image_rows, total);
            let w = quot.dim();
            // Projection matrix onto the canonical quotient coordinates.
            let mut proj = QMat::zeros(w, total);
            for c in 0..total {
                let mut unit = vec![Rat::zero(); total];
                unit[c] = Rat::from_integer(1.into());
                for (r, val) in quot.reduce(&unit).into_iter().enumerate() {
                    proj.set(r, c, val);
                }
            }
            let mut dims = v.dims.clone();
            dims[k] = w;
            let mats: Vec<QMat> = reflected
                .arrows()
                .iter()
                .enumerate()
                .map(|(idx, _)| {
                    if let Some(pos) = outgoing.iter().position(|&i| i == idx) {
                        // New arrow j -> k: inclusion into the sum, then project.
                        let off: usize = row_dims[..pos].iter().sum();
                        QMat::from_fn(w, row_dims[pos], |r, c| proj.get(r, off + c).clone())
                    } else {
                        v.mats[idx].clone()
                    }
                })
                .collect();
            Ok(Representation::new(reflected, dims, mats))
        }
    }
}

/// Apply the reflection functor to a morphism. The block at `k` is the
/// induced map on kernels (resp. cokernels); other blocks are unchanged.
pub fn reflect_mor(
    k: usize,
    sign: ReflectSign,
    f: &MorphismMatrix,
    new_source: &Arc<Representation>,
    new_target: &Arc<Representation>,
) -> Result<MorphismMatrix, RepError> {
    let q = &f.source.quiver;
    let mut blocks = f.blocks.clone();
    match sign {
        ReflectSign::Plus => {
            let incoming: Vec<usize> = (0..q.arrows().len())
                .filter(|&idx| q.arrows()[idx].to == k)
                .collect();
            // Kernel inclusions, read back off the reflected representations.
            let stack_incl = |rep: &Representation, refl: &Representation| {
                let total: usize =
                    incoming.iter().map(|&idx| rep.dims[q.arrows()[idx].from]).sum();
                let mut incl = QMat::zeros(total, refl.dims[k]);
                let mut off = 0;
                for &idx in &incoming {
                    let b = &refl.mats[idx];
                    for r in 0..b.rows() {
                        for c in 0..b.cols() {
                            incl.set(off + r, c, b.get(r, c).clone());
                        }
                    }
                    off += b.rows();
                }
                incl
            };
            let incl_src = stack_incl(&f.source, new_source);
            let incl_tgt = stack_incl(&f.target, new_target);
            // Block-diagonal action of f on the direct sums.
            let total_src = incl_src.rows();
            let mut action = QMat::zeros(incl_tgt.rows(), total_src);
            let mut roff = 0;
            let mut coff = 0;
            for &idx in &incoming {
                let j = q.arrows()[idx].from;
                let b = &f.blocks[j];
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        action.set(roff + r, coff + c, b.get(r, c).clone());
                    }
                }
                roff += f.target.dims[j];
                coff += f.source.dims[j];
            }
            let rhs = action.mul(&incl_src);
            let block = incl_tgt.solve(&rhs).expect("restriction to kernels must exist");
            blocks[k] = block;
        }
        ReflectSign::Minus => {
            let outgoing: Vec<usize> = (0..q.arrows().len())
                .filter(|&idx| q.arrows()[idx].from == k)
                .collect();
            // Quotient projections, read back off the reflected representations.
            let stack_proj = |rep: &Representation, refl: &Representation| {
                let total: usize =
                    outgoing.iter().map(|&idx| rep.dims[q.arrows()[idx].to]).sum();
                let mut proj = QMat::zeros(refl.dims[k], total);
                let mut off = 0;
                for &idx in &outgoing {
                    let b = &refl.mats[idx];
                    for r in 0..b.rows() {
                        for c in 0..b.cols() {
                            proj.set(r, off + c, b.get(r, c).clone());
                        }
                    }
                    off += b.cols();
                }
                proj
            };
            let proj_src = stack_proj(&f.source, new_source);
            let proj_tgt = stack_proj(&f.target, new_target);
            let total_src = proj_src.cols();
            let mut action = QMat::zeros(proj_tgt.cols(), total_src);
            let mut roff = 0;
            let mut coff = 0;
            for &idx in &outgoing {
                let j = q.arrows()[idx].to;
                let b = &f.blocks[j];
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        action.set(roff + r, coff + c, b.get(r, c).clone());
                    }
                }
                roff += f.target.dims[j];
                coff += f.source.dims[j];
            }
            // Solve block . proj_src = proj_tgt . action via transposes.
            let rhs = proj_tgt.mul(&action).transpose();
            let sol = proj_src
                .transpose()
                .solve(&rhs)
                .expect("corestriction to cokernels must exist");
            blocks[k] = sol.transpose();
        }
    }
    Ok(MorphismMatrix { source: new_source.clone(), target: new_target.clone(), blocks })
}

/// The translate as the fixed composite of reflection functors along the
/// admissible sink sequence of the quiver. Returns `None` when the input is
/// annihilated (projectives for `tau`, injectives for `tau_inv`).
pub fn tau_rep(v: &Representation) -> Result<Option<Representation>, RepError> {
    let order = v.quiver.sink_order();
    let mut cur = v.clone();
    for k in order {
        cur = reflect_rep(k, ReflectSign::Plus, &cur)?;
    }
    Ok(if cur.is_zero() { None } else { Some(cur) })
}

pub fn tau_inv_rep(v: &Representation) -> Result<Option<Representation>, RepError> {
    let order = v.quiver.sink_order();
    let mut cur = v.clone();
    for k in order.into_iter().rev() {
        cur = reflect_rep(k, ReflectSign::Minus, &cur)?;
    }
    Ok(if cur.is_zero() { None } else { Some(cur) })
}

/// Translate a morphism through the same composite. Returns `None` when
/// either endpoint is annihilated.
pub fn tau_inv_mor(f: &MorphismMatrix) -> Result<Option<MorphismMatrix>, RepError> {
    let order = f.source.quiver.sink_order();
    let mut cur = f.clone();
    for k in order.into_iter().rev() {
        let src = Arc::new(reflect_rep(k, ReflectSign::Minus, &cur.source)?);
        let tgt = Arc::new(reflect_rep(k, ReflectSign::Minus, &cur.target)?);
        cur = reflect_mor(k, ReflectSign::Minus, &cur, &src, &tgt)?;
    }
    Ok(if cur.source.is_zero() || cur.target.is_zero() { None } else { Some(cur) })
}

pub fn tau_mor(f: &MorphismMatrix) -> Result<Option<MorphismMatrix>, RepError> {
    let order = f.source.quiver.sink_order();
    let mut cur = f.clone();
    for k in order {
        let src = Arc::new(reflect_rep(k, ReflectSign::Plus, &cur.source)?);
        let tgt = Arc::new(reflect_rep(k, ReflectSign::Plus, &cur.target)?);
        cur = reflect_mor(k, ReflectSign::Plus, &cur, &src, &tgt)?;
    }
    Ok(if cur.source.is_zero() || cur.target.is_zero() { None } else { Some(cur) })
}

pub type DimKey = Vec<i64>;

#[derive(Clone)]
pub struct CatalogEntry {
    pub rep: Arc<Representation>,
    pub projective: Option<usize>,
    pub injective: Option<usize>,
    pub tau: Option<DimKey>,
    pub tau_inv: Option<DimKey>,
}

/// All indecomposables of a simply-laced Dynkin quiver, keyed by dimension
/// vector (a bijection with the positive roots), built from the projectives
/// by iterating the inverse translate. All representations downstream are
/// the catalog's, so bases stay consistent under the translate.
pub struct Catalog {
    pub quiver: Arc<ValuedQuiver>,
    entries: BTreeMap<DimKey, CatalogEntry>,
}

impl fmt::Debug for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Catalog({} objects over {:?})", self.entries.len(), self.quiver)
    }
}

impl Catalog {
    pub fn build(quiver: Arc<ValuedQuiver>) -> Result<Catalog, RepError> {
        require_simply_laced(&quiver)?;
        if !quiver.cartan().is_finite_type() {
            return Err(RepError::NotFiniteType);
        }
        let injective_dims: Vec<DimKey> =
            quiver.injective_dims().iter().map(|r| r.0.clone()).collect();
        let mut entries: BTreeMap<DimKey, CatalogEntry> = BTreeMap::new();
        for i in 0..quiver.rank() {
            let mut prev_key: Option<DimKey> = None;
            let mut cur = build_projective(&quiver, i)?;
            loop {
                let key = cur.dim_vector().0;
                let injective = injective_dims.iter().position(|d| d == &key);
                let entry = CatalogEntry {
                    rep: Arc::new(cur.clone()),
                    projective: if prev_key.is_none() { Some(i) } else { None },
                    injective,
                    tau: prev_key.clone(),
                    tau_inv: None,
                };
                if let Some(pk) = &prev_key {
                    entries.get_mut(pk).unwrap().tau_inv = Some(key.clone());
                }
                entries.insert(key.clone(), entry);
                match tau_inv_rep(&cur)? {
                    Some(next) => {
                        prev_key = Some(key);
                        cur = next;
                    }
                    None => break,
                }
            }
        }
        // The keys must enumerate the positive roots exactly.
        let roots = quiver
            .cartan()
            .positive_roots()
            .map_err(|_| RepError::NotFiniteType)?;
        if entries.len() != roots.len()
            || !roots.iter().all(|r| entries.contains_key(&r.0))
        {
            return Err(RepError::CatalogMismatch);
        }
        Ok(Catalog { quiver, entries })
    }

    /// Rebuild a catalog from stored entries, revalidating the key set
    /// against the positive roots and the stored linkage.
    pub fn from_entries(
        quiver: Arc<ValuedQuiver>,
        entries: BTreeMap<DimKey, CatalogEntry>,
    ) -> Result<Catalog, RepError> {
        let roots = quiver
            .cartan()
            .positive_roots()
            .map_err(|_| RepError::NotFiniteType)?;
        if entries.len() != roots.len()
            || !roots.iter().all(|r| entries.contains_key(&r.0))
        {
            return Err(RepError::CatalogMismatch);
        }
        for (key, e) in &entries {
            if &e.rep.dim_vector().0 != key
                || e.rep.quiver.as_ref() != quiver.as_ref()
                || e.tau.as_ref().is_some_and(|t| !entries.contains_key(t))
                || e.tau_inv.as_ref().is_some_and(|t| !entries.contains_key(t))
            {
                return Err(RepError::CatalogMismatch);
            }
        }
        Ok(Catalog { quiver, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &DimKey> {
        self.entries.keys()
    }

    pub fn entry(&self, key: &DimKey) -> Option<&CatalogEntry> {
        self.entries.get(key)
    }

    pub fn rep(&self, key: &DimKey) -> &Arc<Representation> {
        &self.entries[key].rep
    }

    pub fn contains(&self, key: &DimKey) -> bool {
        self.entries.contains_key(key)
    }

    pub fn projective_key(&self, i: usize) -> DimKey {
        self.quiver.projective_dims()[i].0.clone()
    }

    pub fn injective_key(&self, i: usize) -> DimKey {
        self.quiver.injective_dims()[i].0.clone()
    }

    pub fn simple_key(&self, i: usize) -> DimKey {
        let mut v = vec![0i64; self.quiver.rank()];
        v[i] = 1;
        v
    }

    /// Which projective this key is, if any.
    pub fn as_projective(&self, key: &DimKey) -> Option<usize> {
        self.entries.get(key).and_then(|e| e.projective)
    }

    pub fn as_injective(&self, key: &DimKey) -> Option<usize> {
        self.entries.get(key).and_then(|e| e.injective)
    }
}
