//! On-disk cache of complete range results, one JSON document per cell.
//!
//! A cell is `(group, h, k, restricted, N)`. Hits are never trusted blindly:
//! every stored witness is parsed and recomputed before the result is used.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sumset_core::explorer::{Domain, RangeQuery, SizeRange};
use sumset_core::{AnySet, GroupSet, GroupSpec, IntSet};

const FORMAT: &str = "sumsets-range";
const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Document {
    format: String,
    format_version: u32,
    group: String,
    h: usize,
    k: usize,
    restricted: bool,
    search_bound: u64,
    complete: bool,
    sizes: Vec<usize>,
    witnesses: Vec<StoredWitness>,
    candidates: u128,
    canonical_sets: u128,
}

#[derive(Debug, Serialize, Deserialize)]
struct StoredWitness {
    size: usize,
    set: String,
}

#[derive(Debug)]
pub enum Lookup {
    Hit(SizeRange),
    Miss,
    /// A file exists but failed to parse or revalidate.
    Invalid(PathBuf, String),
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

fn group_tag(domain: &Domain) -> String {
    domain
        .to_string()
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '/' { '_' } else { c })
        .collect()
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, q: &RangeQuery) -> PathBuf {
        let mode = if q.restricted { "restricted" } else { "plain" };
        self.dir.join(format!(
            "range-{}-h{}-k{}-{}-n{}.json",
            group_tag(&q.domain),
            q.h,
            q.k,
            mode,
            q.search_bound
        ))
    }

    pub fn load(&self, q: &RangeQuery) -> Lookup {
        let path = self.path(q);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Lookup::Miss,
            Err(e) => return Lookup::Invalid(path, e.to_string()),
        };
        match decode(&text, q) {
            Ok(r) => Lookup::Hit(r),
            Err(why) => Lookup::Invalid(path, why),
        }
    }

    /// Stores `r` if it is complete; incomplete scans are never cached.
    pub fn store(&self, r: &SizeRange) -> io::Result<bool> {
        if !r.complete {
            return Ok(false);
        }
        fs::create_dir_all(&self.dir)?;
        let doc = Document {
            format: FORMAT.into(),
            format_version: FORMAT_VERSION,
            group: r.domain.to_string(),
            h: r.h,
            k: r.k,
            restricted: r.restricted,
            search_bound: r.search_bound,
            complete: r.complete,
            sizes: r.sizes.clone(),
            witnesses: r
                .witnesses
                .iter()
                .map(|(&size, w)| StoredWitness {
                    size,
                    set: w.to_string(),
                })
                .collect(),
            candidates: r.candidates,
            canonical_sets: r.canonical_sets,
        };
        let q = RangeQuery::new(r.h, r.k, r.search_bound)
            .restricted(r.restricted)
            .domain(r.domain.clone());
        let path = self.path(&q);
        let tmp = path.with_extension("json.tmp");
        let text = serde_json::to_string_pretty(&doc).map_err(io::Error::other)?;
        fs::write(&tmp, text + "\n")?;
        fs::rename(&tmp, &path)?;
        Ok(true)
    }
}

fn decode(text: &str, q: &RangeQuery) -> Result<SizeRange, String> {
    let doc: Document = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc.format != FORMAT || doc.format_version != FORMAT_VERSION {
        return Err(format!("unknown format {} v{}", doc.format, doc.format_version));
    }
    let domain = parse_domain(&doc.group)?;
    if domain != q.domain
        || (doc.h, doc.k, doc.restricted, doc.search_bound) != (q.h, q.k, q.restricted, q.search_bound)
    {
        return Err("cell parameters do not match the file name".into());
    }
    if !doc.complete {
        return Err("incomplete result stored".into());
    }
    let mut witnesses = BTreeMap::new();
    for w in &doc.witnesses {
        let set = match &domain {
            Domain::Integers => w.set.parse::<IntSet>().map(AnySet::Int),
            Domain::Group(spec) => GroupSet::parse(spec, &w.set).map(AnySet::Group),
        }
        .map_err(|e| format!("witness {}: {e}", w.set))?;
        let size = set.fold_size(q.h, q.restricted).map_err(|e| e.to_string())?;
        if set.size() != q.k || size != w.size {
            return Err(format!("witness {} for size {} recomputes to {}", w.set, w.size, size));
        }
        witnesses.insert(w.size, set);
    }
    if !doc.sizes.iter().eq(witnesses.keys()) {
        return Err("size list and witnesses disagree".into());
    }
    Ok(SizeRange {
        h: doc.h,
        k: doc.k,
        domain,
        search_bound: doc.search_bound,
        restricted: doc.restricted,
        sizes: doc.sizes,
        witnesses,
        complete: true,
        candidates: doc.candidates,
        canonical_sets: doc.canonical_sets,
    })
}

pub fn parse_domain(text: &str) -> Result<Domain, String> {
    let spec: GroupSpec = text.parse().map_err(|e: sumset_core::Error| e.to_string())?;
    Ok(if spec == GroupSpec::integers() {
        Domain::Integers
    } else {
        Domain::Group(spec)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_revalidation() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let q = RangeQuery::new(3, 3, 8);
        assert!(matches!(cache.load(&q), Lookup::Miss));
        let r = sumset_core::enumerate_range(&q).unwrap();
        assert!(cache.store(&r).unwrap());
        match cache.load(&q) {
            Lookup::Hit(hit) => assert_eq!(hit, r),
            other => panic!("{other:?}"),
        }
        // Corrupt one witness: the hit must be rejected.
        let path = cache.path(&q);
        let text = fs::read_to_string(&path).unwrap().replace("{0,1,4}", "{0,1,3}");
        fs::write(&path, text).unwrap();
        assert!(matches!(cache.load(&q), Lookup::Invalid(..)));
    }

    #[test]
    fn group_cells_and_incomplete_results() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let spec: GroupSpec = "z/4 + z".parse().unwrap();
        let q = RangeQuery::new(2, 3, 2).group(spec).restricted(true);
        let r = sumset_core::enumerate_range(&q).unwrap();
        cache.store(&r).unwrap();
        assert!(cache.path(&q).ends_with("range-z_4+z-h2-k3-restricted-n2.json"));
        assert!(matches!(cache.load(&q), Lookup::Hit(_)));
        let mut partial = r.clone();
        partial.complete = false;
        let other = Cache::new(dir.path().join("sub"));
        assert!(!other.store(&partial).unwrap());
    }
}
