//! Valued quivers: orientations of a valued graph, sink/source structure,
//! orientation reflection, and the homological matrices (projective
//! dimension vectors, Euler form, Coxeter transformation).

use crate::linalg::IMat;
use crate::roots::{CartanData, CartanError, RootVec};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("two arrows between vertices {0} and {1}: two-cycles and parallel edges are not allowed")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("quiver has an oriented cycle")]
    Cyclic,
    #[error("valuation components must be positive, got ({0},{1})")]
    BadValuation(i64, i64),
}

/// An arrow `from -> to` with valuation `(d_{from,to}, d_{to,from})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub val: (i64, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexClass {
    Sink,
    Source,
    Interior,
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexClass::Sink => write!(f, "sink"),
            VertexClass::Source => write!(f, "source"),
            VertexClass::Interior => write!(f, "interior"),
        }
    }
}

/// A valued quiver `(Gamma, d, Omega)` without oriented cycles.
///
/// The Cartan matrix is determined by the valuations through the convention
/// `a_ij = -d_ij` for each edge; reflecting the orientation therefore never
/// changes the Cartan data. Vertices are zero-based internally and one-based
/// in all textual interfaces.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuedQuiver {
    cartan: CartanData,
    arrows: Vec<Arrow>,
}

impl fmt::Debug for ValuedQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| format!("{}->{}[{},{}]", a.from + 1, a.to + 1, a.val.0, a.val.1))
            .collect();
        write!(f, "ValuedQuiver(n={}, {})", self.rank(), arrows.join(" "))
    }
}

impl ValuedQuiver {
    /// Build from a vertex count and a list of valued arrows (zero-based).
    pub fn new(n: usize, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for a in &arrows {
            if a.from >= n {
                return Err(QuiverError::VertexOutOfRange(a.from + 1, n));
            }
            if a.to >= n {
                return Err(QuiverError::VertexOutOfRange(a.to + 1, n));
            }
            if a.from == a.to {
                return Err(QuiverError::Loop(a.from + 1));
            }
            if a.val.0 <= 0 || a.val.1 <= 0 {
                return Err(QuiverError::BadValuation(a.val.0, a.val.1));
            }
            if rows[a.from][a.to] != 0 {
                return Err(QuiverError::DuplicateEdge(a.from + 1, a.to + 1));
            }
            rows[a.from][a.to] = -a.val.0;
            rows[a.to][a.from] = -a.val.1;
        }
        let cartan = CartanData::new(rows)?;
        let q = ValuedQuiver { cartan, arrows };
        q.topological_order()?;
        Ok(q)
    }

    /// Simply-laced quiver from plain arrows.
    pub fn simply_laced(n: usize, arrows: &[(usize, usize)]) -> Result<Self, QuiverError> {
        Self::new(
            n,
            arrows.iter().map(|&(from, to)| Arrow { from, to, val: (1, 1) }).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn is_simply_laced(&self) -> bool {
        self.arrows.iter().all(|a| a.val == (1, 1))
    }

    pub fn is_sink(&self, k: usize) -> bool {
        self.arrows.iter().all(|a| a.from != k)
    }

    pub fn is_source(&self, k: usize) -> bool {
        self.arrows.iter().all(|a| a.to != k)
    }

    /// Classify a vertex. An isolated vertex is reported as a sink; the
    /// predicates `is_sink` / `is_source` both hold for it.
    pub fn classify_vertex(&self, k: usize) -> Result<VertexClass, QuiverError> {
        if k >= self.rank() {
            return Err(QuiverError::VertexOutOfRange(k + 1, self.rank()));
        }
        Ok(if self.is_sink(k) {
            VertexClass::Sink
        } else if self.is_source(k) {
            VertexClass::Source
        } else {
            VertexClass::Interior
        })
    }

    /// Reverse every arrow incident to `k`, swapping valuation components.
    pub fn reflect_orientation(&self, k: usize) -> ValuedQuiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.from == k || a.to == k {
                    Arrow { from: a.to, to: a.from, val: (a.val.1, a.val.0) }
                } else {
                    *a
                }
            })
            .collect();
        ValuedQuiver { cartan: self.cartan.clone(), arrows }
    }

    /// Topological order of vertices (sources first). Errors on cycles.
    pub fn topological_order(&self) -> Result<Vec<usize>, QuiverError> {
        let n = self.rank();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.to] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        ready.sort_unstable_by(|a, b| b.cmp(a));
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in &self.arrows {
                if a.from == v {
                    indeg[a.to] -= 1;
                    if indeg[a.to] == 0 {
                        ready.push(a.to);
                        ready.sort_unstable_by(|a, b| b.cmp(a));
                    }
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err(QuiverError::Cyclic)
        }
    }

    /// The fixed admissible sink sequence: repeatedly reflect away the
    /// smallest-labelled sink of the current orientation. Every vertex
    /// occurs exactly once and the orientation returns to the original.
    pub fn sink_order(&self) -> Vec<usize> {
        let n = self.rank();
        let mut q = self.clone();
        let mut used = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let k = (0..n)
                .find(|&v| !used[v] && q.is_sink(v))
                .expect("acyclic quiver must have an unused sink");
            used[k] = true;
            order.push(k);
            q = q.reflect_orientation(k);
        }
        order
    }

    /// Dimension vectors of the indecomposable projectives, as columns.
    /// Computed by the path recursion `dim P_i = e_i + sum d_im dim P_m`
    /// over arrows `i -> m`.
    pub fn projective_dims(&self) -> Vec<RootVec> {
        let n = self.rank();
        let order = self.topological_order().expect("acyclic");
        let mut dims: Vec<Option<Vec<i64>>> = vec![None; n];
        for &i in order.iter().rev() {
            let mut v = vec![0i64; n];
            v[i] = 1;
            for a in self.arrows.iter().filter(|a| a.from == i) {
                let sub = dims[a.to].as_ref().expect("topological order");
                for (c, s) in v.iter_mut().zip(sub) {
                    *c += a.val.0 * s;
                }
            }
            dims[i] = Some(v);
        }
        dims.into_iter().map(|v| RootVec(v.unwrap())).collect()
    }

    /// Dimension vectors of the indecomposable injectives, dually.
    pub fn injective_dims(&self) -> Vec<RootVec> {
        let n = self.rank();
        let order = self.topological_order().expect("acyclic");
        let mut dims: Vec<Option<Vec<i64>>> = vec![None; n];
        for &i in order.iter() {
            let mut v = vec![0i64; n];
            v[i] = 1;
            for a in self.arrows.iter().filter(|a| a.to == i) {
                let sub = dims[a.from].as_ref().expect("topological order");
                for (c, s) in v.iter_mut().zip(sub) {
                    *c += a.val.1 * s;
                }
            }
            dims[i] = Some(v);
        }
        dims.into_iter().map(|v| RootVec(v.unwrap())).collect()
    }

    /// Euler form matrix `E` with `<x, y> = x^T E y`, where the form computes
    /// `dim Hom(X, Y) - dim Ext^1(X, Y)` over the base field.
    pub fn euler_matrix(&self) -> IMat {
        let n = self.rank();
        let d = self.cartan.symmetrizers();
        let mut e = IMat::zeros(n, n);
        for i in 0..n {
            e.set(i, i, d[i]);
        }
        for a in &self.arrows {
            e.set(a.from, a.to, -d[a.from] * a.val.0);
        }
        e
    }

    /// Matrix of the Auslander-Reiten translate on the Grothendieck group:
    /// the product of simple reflections along the admissible sink sequence.
    /// Calibrated so that `coxeter * dim X = dim tau X` for non-projective
    /// indecomposables.
    pub fn coxeter_matrix(&self) -> IMat {
        let mut m = IMat::identity(self.rank());
        for k in self.sink_order() {
            m = self.cartan.reflection_matrix(k).mul(&m);
        }
        m
    }

    /// Inverse Coxeter matrix, as the reversed reflection product.
    pub fn coxeter_inverse(&self) -> IMat {
        let mut m = IMat::identity(self.rank());
        for k in self.sink_order().into_iter().rev() {
            m = self.cartan.reflection_matrix(k).mul(&m);
        }
        m
    }

    /// The projective-dimension, Euler and Coxeter matrices together.
    pub fn projective_data(&self) -> (IMat, IMat, IMat) {
        let n = self.rank();
        let dims = self.projective_dims();
        let mut c = IMat::zeros(n, n);
        for (i, p) in dims.iter().enumerate() {
            for r in 0..n {
                c.set(r, i, p.0[r]);
            }
        }
        (c, self.euler_matrix(), self.coxeter_matrix())
    }

    /// Canonical one-line description, also used for hashing.
    pub fn canonical_text(&self) -> String {
        let mut arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| format!("{}->{}[{},{}]", a.from + 1, a.to + 1, a.val.0, a.val.1))
            .collect();
        arrows.sort();
        format!("n={};{}", self.rank(), arrows.join(";"))
    }
}

/// Quivers used in tests and examples: a linear `A_n` orientation `1->2->...`.
pub fn linear_quiver(n: usize) -> ValuedQuiver {
    ValuedQuiver::simply_laced(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
}
