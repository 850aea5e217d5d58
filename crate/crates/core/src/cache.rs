//! Optional on-disk cache for indecomposable catalogs, keyed by quiver hash.
//! Single-writer with atomic rename; the directory comes from the
//! `CLUSTERCAT_CACHE_DIR` environment variable.

use crate::quiver::ValuedQuiver;
use crate::quiverfile::quiver_hash;
use crate::rep::{Catalog, CatalogEntry, DimKey, Representation};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use std::sync::Arc;

pub const CACHE_ENV: &str = "CLUSTERCAT_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CachedEntry {
    key: DimKey,
    rep: Representation,
    projective: Option<usize>,
    injective: Option<usize>,
    tau: Option<DimKey>,
    tau_inv: Option<DimKey>,
}

#[derive(Serialize, Deserialize)]
struct CachedCatalog {
    schema: String,
    quiver: ValuedQuiver,
    entries: Vec<CachedEntry>,
}

const CACHE_SCHEMA: &str = "clustercat-catalog/1";

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

fn cache_path(dir: &Path, q: &ValuedQuiver) -> PathBuf {
    dir.join(format!("catalog-{}.json", quiver_hash(q)))
}

/// Load a catalog from the cache, or build it and store it. Falls back to a
/// plain build on any cache problem.
pub fn catalog_cached(quiver: Arc<ValuedQuiver>, dir: Option<&Path>) -> Result<Catalog, crate::rep::RepError> {
    let Some(dir) = dir else {
        return Catalog::build(quiver);
    };
    let path = cache_path(dir, &quiver);
    if let Some(cat) = try_load(&path, &quiver) {
        return Ok(cat);
    }
    let cat = Catalog::build(quiver)?;
    let _ = store(&path, &cat);
    Ok(cat)
}

fn try_load(path: &Path, quiver: &Arc<ValuedQuiver>) -> Option<Catalog> {
    let text = std::fs::read_to_string(path).ok()?;
    let cached: CachedCatalog = serde_json::from_str(&text).ok()?;
    if cached.schema != CACHE_SCHEMA || &cached.quiver != quiver.as_ref() {
        return None;
    }
    let entries = cached
        .entries
        .into_iter()
        .map(|e| {
            (
                e.key,
                CatalogEntry {
                    rep: Arc::new(e.rep),
                    projective: e.projective,
                    injective: e.injective,
                    tau: e.tau,
                    tau_inv: e.tau_inv,
                },
            )
        })
        .collect();
    Catalog::from_entries(quiver.clone(), entries).ok()
}

fn store(path: &Path, cat: &Catalog) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let entries: Vec<CachedEntry> = cat
        .keys()
        .map(|key| {
            let e = cat.entry(key).unwrap();
            CachedEntry {
                key: key.clone(),
                rep: e.rep.as_ref().clone(),
                projective: e.projective,
                injective: e.injective,
                tau: e.tau.clone(),
                tau_inv: e.tau_inv.clone(),
            }
        })
        .collect();
    let cached = CachedCatalog {
        schema: CACHE_SCHEMA.to_string(),
        quiver: cat.quiver.as_ref().clone(),
        entries,
    };
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string(&cached)?)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}
