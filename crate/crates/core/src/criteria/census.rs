//! Census of generalized Alexander quandles over the group catalog.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use super::{hopf_witness, trefoil_witness};
use crate::group::{automorphisms, standard_catalog, DEFAULT_MAX_ORDER};
use crate::quandle::{galex, isomorphic, FiniteQuandle, QuandleProfile};

/// Tab-separated column names, in record field order.
pub const CENSUS_HEADER: &str = "# group_name\tgroup_order\tautomorphism_index\tquandle_order\tisomorphism_class_representative\thopf_admissible\ttrefoil_admissible";

const CHUNK: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("maximum group order {order} exceeds the catalog bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("catalog group {0} failed to build")]
    Catalog(String),
}

/// One `(group, automorphism)` pair. `automorphism_index` indexes the
/// lexicographically sorted automorphism list of the group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CensusRecord {
    pub group_name: String,
    pub group_order: usize,
    pub automorphism_index: usize,
    pub quandle_order: usize,
    /// True iff no earlier record in census order is isomorphic to this one.
    pub isomorphism_class_representative: bool,
    pub hopf_admissible: bool,
    pub trefoil_admissible: bool,
}

impl fmt::Display for CensusRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.group_name,
            self.group_order,
            self.automorphism_index,
            self.quandle_order,
            self.isomorphism_class_representative,
            self.hopf_admissible,
            self.trefoil_admissible
        )
    }
}

/// Isomorphism classes seen so far. Candidates are only compared against
/// representatives with the same invariant profile.
#[derive(Debug, Default)]
pub struct IsoClasses {
    reps: Vec<FiniteQuandle>,
    by_profile: HashMap<QuandleProfile, Vec<usize>>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representatives(&self) -> &[FiniteQuandle] {
        &self.reps
    }

    /// Class index of `q` and whether `q` opened a new class.
    pub fn insert(&mut self, q: FiniteQuandle) -> (usize, bool) {
        self.insert_profiled(QuandleProfile::of(&q), q)
    }

    fn insert_profiled(&mut self, profile: QuandleProfile, q: FiniteQuandle) -> (usize, bool) {
        let bucket = self.by_profile.entry(profile).or_default();
        if let Some(&c) = bucket.iter().find(|&&c| isomorphic(&self.reps[c], &q).is_some()) {
            return (c, false);
        }
        let c = self.reps.len();
        bucket.push(c);
        self.reps.push(q);
        (c, true)
    }
}

/// Every `GAlex(G, σ)` for catalog groups of order at most `max_group_order`,
/// in order of (group order, group name, automorphism index). With `dedup`
/// only class representatives are returned.
pub fn census_galex(max_group_order: usize, dedup: bool) -> Result<Vec<CensusRecord>, CensusError> {
    if max_group_order > DEFAULT_MAX_ORDER {
        return Err(CensusError::OrderTooLarge { order: max_group_order, bound: DEFAULT_MAX_ORDER });
    }
    let mut classes = IsoClasses::new();
    let mut records = Vec::new();
    for spec in standard_catalog(max_group_order) {
        let name = spec.to_string();
        let group = spec.build().map_err(|_| CensusError::Catalog(name.clone()))?;
        let auts = automorphisms(&group);
        for (base, chunk) in auts.chunks(CHUNK).enumerate() {
            let computed: Vec<_> = chunk
                .par_iter()
                .map(|sigma| {
                    let q = galex(&group, sigma).expect("automorphism belongs to the group");
                    let flags = (hopf_witness(&q).is_none(), trefoil_witness(&q).is_none());
                    (QuandleProfile::of(&q), q, flags)
                })
                .collect();
            for (offset, (profile, q, (hopf, trefoil))) in computed.into_iter().enumerate() {
                let quandle_order = q.order();
                let (_, fresh) = classes.insert_profiled(profile, q);
                records.push(CensusRecord {
                    group_name: name.clone(),
                    group_order: group.order(),
                    automorphism_index: base * CHUNK + offset,
                    quandle_order,
                    isomorphism_class_representative: fresh,
                    hopf_admissible: hopf,
                    trefoil_admissible: trefoil,
                });
            }
        }
    }
    if dedup {
        records.retain(|r| r.isomorphism_class_representative);
    }
    Ok(records)
}

/// Per quandle order: number of isomorphism classes and how many of them
/// fail the trefoil criterion. Only representative records are counted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassCount {
    pub classes: usize,
    pub non_trefoil_admissible: usize,
}

pub fn class_counts(records: &[CensusRecord]) -> BTreeMap<usize, ClassCount> {
    let mut out: BTreeMap<usize, ClassCount> = BTreeMap::new();
    for r in records.iter().filter(|r| r.isomorphism_class_representative) {
        let c = out.entry(r.quandle_order).or_default();
        c.classes += 1;
        c.non_trefoil_admissible += usize::from(!r.trefoil_admissible);
    }
    out
}
