//! Induced reflection functors on the cluster and root categories, the
//! labelling of cluster indecomposables by almost positive roots, and the
//! verification sweeps for the commutative diagrams with truncated and full
//! reflections.
//!
//! Valued Dynkin types run at label and dimension-vector level; simply laced
//! types additionally push every module case through the matrix-level
//! functor and check the resulting dimension vector and catalog membership.

use crate::cluster::{ext1_cluster, ClusterObject};
use crate::quiver::ValuedQuiver;
use crate::rep::{reflect_rep, Catalog, ReflectSign, RepError};
use crate::roots::{AlmostPositiveRoot, CartanData, RootVec};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrbitError {
    #[error("vertex {0} is neither a sink nor a source")]
    NotSinkOrSource(usize),
    #[error("label {0} is outside the fundamental domain")]
    OutsideDomain(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// A cluster-category indecomposable at label level: a module with its
/// dimension vector, or a shifted projective.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ClusterLabel {
    Module(RootVec),
    ShiftedProjective(usize),
}

impl fmt::Display for ClusterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterLabel::Module(v) => write!(f, "M{v}"),
            ClusterLabel::ShiftedProjective(i) => write!(f, "P{}[1]", i + 1),
        }
    }
}

/// A root-category indecomposable at label level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RootLabel {
    Module(RootVec),
    ShiftedModule(RootVec),
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLabel::Module(v) => write!(f, "M{v}"),
            RootLabel::ShiftedModule(v) => write!(f, "M{v}[1]"),
        }
    }
}

/// Fundamental-domain labels of the cluster category of a valued Dynkin
/// quiver: one module per positive root plus the shifted projectives.
pub fn cluster_labels(cartan: &CartanData) -> Result<Vec<ClusterLabel>, OrbitError> {
    let mut out: Vec<ClusterLabel> = cartan
        .positive_roots()
        .map_err(|_| RepError::NotFiniteType)?
        .into_iter()
        .map(ClusterLabel::Module)
        .collect();
    out.extend((0..cartan.rank()).map(ClusterLabel::ShiftedProjective));
    Ok(out)
}

/// Labels of the root category: modules and shifted modules per positive root.
pub fn root_labels(cartan: &CartanData) -> Result<Vec<RootLabel>, OrbitError> {
    let pos = cartan.positive_roots().map_err(|_| RepError::NotFiniteType)?;
    let mut out: Vec<RootLabel> = pos.iter().cloned().map(RootLabel::Module).collect();
    out.extend(pos.into_iter().map(RootLabel::ShiftedModule));
    Ok(out)
}

/// The bijection onto the almost positive roots: a module goes to its
/// dimension vector, a shifted projective to minus its simple root.
pub fn gamma(label: &ClusterLabel) -> AlmostPositiveRoot {
    match label {
        ClusterLabel::Module(v) => AlmostPositiveRoot::Positive(v.clone()),
        ClusterLabel::ShiftedProjective(i) => AlmostPositiveRoot::NegativeSimple(*i),
    }
}

/// The signed dimension vector of a root-category label.
pub fn root_dim(label: &RootLabel) -> RootVec {
    match label {
        RootLabel::Module(v) => v.clone(),
        RootLabel::ShiftedModule(v) => v.neg(),
    }
}

fn check_sink_or_source(q: &ValuedQuiver, k: usize) -> Result<(), OrbitError> {
    if q.is_sink(k) || q.is_source(k) {
        Ok(())
    } else {
        Err(OrbitError::NotSinkOrSource(k + 1))
    }
}

/// The induced reflection functor on cluster labels, for `k` a sink (plus
/// construction) or a source (minus construction) of the orientation. The
/// simple at `k` crosses to the shifted projective and back; every other
/// module maps by the simple reflection on dimension vectors; other shifted
/// projectives are fixed.
pub fn cluster_reflect_label(
    q: &ValuedQuiver,
    k: usize,
    label: &ClusterLabel,
) -> Result<ClusterLabel, OrbitError> {
    check_sink_or_source(q, k)?;
    let cartan = q.cartan();
    Ok(match label {
        ClusterLabel::Module(v) if *v == RootVec::simple(cartan.rank(), k) => {
            ClusterLabel::ShiftedProjective(k)
        }
        ClusterLabel::Module(v) => ClusterLabel::Module(cartan.simple_reflection(k, v)),
        ClusterLabel::ShiftedProjective(j) if *j == k => {
            ClusterLabel::Module(RootVec::simple(cartan.rank(), k))
        }
        ClusterLabel::ShiftedProjective(j) => ClusterLabel::ShiftedProjective(*j),
    })
}

/// The induced reflection functor on root-category labels: the simple at `k`
/// crosses to its shifted copy; other modules reflect; shifted labels map
/// equivariantly.
pub fn root_reflect_label(
    q: &ValuedQuiver,
    k: usize,
    label: &RootLabel,
) -> Result<RootLabel, OrbitError> {
    check_sink_or_source(q, k)?;
    let cartan = q.cartan();
    let simple = RootVec::simple(cartan.rank(), k);
    Ok(match label {
        RootLabel::Module(v) if *v == simple => RootLabel::ShiftedModule(simple),
        RootLabel::Module(v) => RootLabel::Module(cartan.simple_reflection(k, v)),
        RootLabel::ShiftedModule(v) if *v == simple => RootLabel::Module(simple),
        RootLabel::ShiftedModule(v) => RootLabel::ShiftedModule(cartan.simple_reflection(k, v)),
    })
}

/// Matrix-level check for a module label: push the catalog representative
/// through the reflection functor and return the image's dimension vector,
/// verifying it is again a catalog object on the reflected quiver.
fn reflect_module_matrix_level(
    cat: &Catalog,
    reflected: &Catalog,
    k: usize,
    v: &RootVec,
) -> Result<RootVec, OrbitError> {
    let sign = if cat.quiver.is_sink(k) { ReflectSign::Plus } else { ReflectSign::Minus };
    let image = reflect_rep(k, sign, cat.rep(&v.0))?;
    let key = image.dim_vector();
    if !reflected.contains(&key.0) {
        return Err(OrbitError::OutsideDomain(format!("{key}")));
    }
    Ok(key)
}

/// One mismatch in a commutative-diagram sweep.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramFailure {
    pub object: String,
    pub through_functor: String,
    pub through_reflection: String,
}

/// Result of a verification sweep: structured counterexamples, never a bare
/// boolean.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramReport {
    pub vertex: usize,
    pub checked: usize,
    pub failures: Vec<DiagramFailure>,
}

impl DiagramReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify that labelling commutes with reflecting: gamma of the functor
/// image equals the truncated reflection of gamma. Matrix-level for simply
/// laced quivers, label-level otherwise.
pub fn verify_cluster_diagram(q: &ValuedQuiver, k: usize) -> Result<DiagramReport, OrbitError> {
    check_sink_or_source(q, k)?;
    let cartan = q.cartan();
    let labels = cluster_labels(cartan)?;
    let matrix_level = q.is_simply_laced();
    let (cat, reflected_cat) = if matrix_level {
        let cat = Catalog::build(std::sync::Arc::new(q.clone()))?;
        let refl = Catalog::build(std::sync::Arc::new(q.reflect_orientation(k)))?;
        (Some(cat), Some(refl))
    } else {
        (None, None)
    };
    let mut failures = Vec::new();
    for label in &labels {
        let image = cluster_reflect_label(q, k, label)?;
        if let (Some(cat), Some(refl)) = (&cat, &reflected_cat) {
            // The module case must agree with the matrix-level functor.
            if let (ClusterLabel::Module(v), ClusterLabel::Module(w)) = (label, &image) {
                if *v != RootVec::simple(cartan.rank(), k) {
                    let computed = reflect_module_matrix_level(cat, refl, k, v)?;
                    if computed != *w {
                        failures.push(DiagramFailure {
                            object: label.to_string(),
                            through_functor: format!("M{computed}"),
                            through_reflection: image.to_string(),
                        });
                        continue;
                    }
                }
            }
        }
        let lhs = gamma(&image);
        let rhs = cartan
            .truncated_reflection(k, &gamma(label))
            .expect("vertex in range");
        if lhs != rhs {
            failures.push(DiagramFailure {
                object: label.to_string(),
                through_functor: lhs.to_string(),
                through_reflection: rhs.to_string(),
            });
        }
    }
    Ok(DiagramReport { vertex: k, checked: labels.len(), failures })
}

/// Verify that signed dimension vectors commute with reflecting on the root
/// category: dim of the functor image equals the simple reflection of dim.
pub fn verify_root_diagram(q: &ValuedQuiver, k: usize) -> Result<DiagramReport, OrbitError> {
    check_sink_or_source(q, k)?;
    let cartan = q.cartan();
    let labels = root_labels(cartan)?;
    let matrix_level = q.is_simply_laced();
    let (cat, reflected_cat) = if matrix_level {
        let cat = Catalog::build(std::sync::Arc::new(q.clone()))?;
        let refl = Catalog::build(std::sync::Arc::new(q.reflect_orientation(k)))?;
        (Some(cat), Some(refl))
    } else {
        (None, None)
    };
    let mut failures = Vec::new();
    for label in &labels {
        let image = root_reflect_label(q, k, label)?;
        if let (Some(cat), Some(refl)) = (&cat, &reflected_cat) {
            let (v, w) = match (label, &image) {
                (RootLabel::Module(v), RootLabel::Module(w))
                | (RootLabel::ShiftedModule(v), RootLabel::ShiftedModule(w)) => {
                    (Some(v), Some(w))
                }
                _ => (None, None),
            };
            if let (Some(v), Some(w)) = (v, w) {
                let computed = reflect_module_matrix_level(cat, refl, k, v)?;
                if computed != *w {
                    failures.push(DiagramFailure {
                        object: label.to_string(),
                        through_functor: format!("M{computed}"),
                        through_reflection: image.to_string(),
                    });
                    continue;
                }
            }
        }
        let lhs = root_dim(&image);
        let rhs = cartan.simple_reflection(k, &root_dim(label));
        if lhs != rhs {
            failures.push(DiagramFailure {
                object: label.to_string(),
                through_functor: format!("{lhs}"),
                through_reflection: format!("{rhs}"),
            });
        }
    }
    Ok(DiagramReport { vertex: k, checked: labels.len(), failures })
}

/// Equivalence-shadow report: the reflection functor must give a bijection
/// of indecomposables preserving pairwise extension dimensions and carrying
/// tilting sets to tilting sets, with equal counts on both sides.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub vertex: usize,
    pub objects: usize,
    pub bijective: bool,
    pub ext_matrix_preserved: bool,
    pub tilting_count_left: usize,
    pub tilting_count_right: usize,
    pub tilting_sets_map_to_tilting_sets: bool,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.bijective
            && self.ext_matrix_preserved
            && self.tilting_count_left == self.tilting_count_right
            && self.tilting_sets_map_to_tilting_sets
    }
}

fn label_to_object(cat: &Catalog, label: &ClusterLabel) -> ClusterObject {
    match label {
        ClusterLabel::Module(v) => ClusterObject::module(v.0.clone()),
        ClusterLabel::ShiftedProjective(i) => ClusterObject::shifted_projective(cat, *i),
    }
}

/// Run the equivalence-invariant suite at a sink or source of a simply-laced
/// Dynkin quiver.
pub fn equivalence_invariants(q: &ValuedQuiver, k: usize) -> Result<EquivalenceReport, OrbitError> {
    check_sink_or_source(q, k)?;
    let left = Catalog::build(std::sync::Arc::new(q.clone()))?;
    let reflected = q.reflect_orientation(k);
    let right = Catalog::build(std::sync::Arc::new(reflected.clone()))?;
    let labels = cluster_labels(q.cartan())?;
    let images: Vec<ClusterLabel> = labels
        .iter()
        .map(|l| cluster_reflect_label(q, k, l))
        .collect::<Result<_, _>>()?;
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let bijective = sorted.len() == labels.len();

    let left_objects: Vec<ClusterObject> =
        labels.iter().map(|l| label_to_object(&left, l)).collect();
    let right_objects: Vec<ClusterObject> =
        images.iter().map(|l| label_to_object(&right, l)).collect();
    let mut ext_matrix_preserved = true;
    for i in 0..left_objects.len() {
        for j in 0..left_objects.len() {
            let a = ext1_cluster(&left, &left_objects[i], &left_objects[j]);
            let b = ext1_cluster(&right, &right_objects[i], &right_objects[j]);
            if a != b {
                ext_matrix_preserved = false;
            }
        }
    }

    let left_tilting = crate::cluster::enumerate_tilting_sets(&left);
    let right_tilting = crate::cluster::enumerate_tilting_sets(&right);
    let mut mapped_ok = true;
    for set in &left_tilting {
        let mapped: Vec<ClusterObject> = set
            .objects
            .iter()
            .map(|o| {
                let label = object_to_label(&left, o);
                let image = cluster_reflect_label(q, k, &label).expect("valid vertex");
                label_to_object(&right, &image)
            })
            .collect();
        let mut sorted = mapped.clone();
        sorted.sort();
        if !right_tilting.iter().any(|t| t.objects == sorted) {
            mapped_ok = false;
        }
    }

    Ok(EquivalenceReport {
        vertex: k,
        objects: labels.len(),
        bijective,
        ext_matrix_preserved,
        tilting_count_left: left_tilting.len(),
        tilting_count_right: right_tilting.len(),
        tilting_sets_map_to_tilting_sets: mapped_ok,
    })
}

pub fn object_to_label(cat: &Catalog, o: &ClusterObject) -> ClusterLabel {
    if o.is_module() {
        ClusterLabel::Module(RootVec(o.0.key.clone()))
    } else {
        ClusterLabel::ShiftedProjective(
            cat.as_projective(&o.0.key).expect("shifted projective"),
        )
    }
}
