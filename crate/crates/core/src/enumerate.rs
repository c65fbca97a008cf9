//! Exhaustive count of parameter arrays over GF(p).
//!
//! The grid of `p^8` arrays is walked in lexicographic order, sharded by the
//! value of `θ0`. Shards are independent and their counts are summed.

use std::collections::BTreeMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::shape121::{admissible, relative, D4Element, ParameterArray};

/// Largest grid enumerated without an explicit override: `7^8`.
pub const DEFAULT_GRID_LIMIT: u128 = 5_764_801;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub p: u64,
    pub grid: u128,
    /// Arrays passing (i).
    pub distinct: u64,
    /// Arrays passing (i) and (ii).
    pub nonzero: u64,
    /// Arrays passing (i), (ii) and (iii).
    pub admissible: u64,
    pub orbits: Option<OrbitSummary>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrbitSummary {
    pub count: u64,
    /// Orbit size to number of orbits of that size.
    pub sizes: BTreeMap<usize, u64>,
}

impl OrbitSummary {
    pub fn total(&self) -> u64 {
        self.sizes.iter().map(|(&size, &n)| size as u64 * n).sum()
    }
}

#[derive(Default)]
struct Shard {
    distinct: u64,
    nonzero: u64,
    admissible: u64,
    orbit_sizes: BTreeMap<usize, u64>,
}

impl Shard {
    fn merge(mut self, other: Shard) -> Shard {
        self.distinct += other.distinct;
        self.nonzero += other.nonzero;
        self.admissible += other.admissible;
        for (size, n) in other.orbit_sizes {
            *self.orbit_sizes.entry(size).or_default() += n;
        }
        self
    }
}

/// Counts the admissible arrays over GF(p). The grid has `p^8` points and is
/// refused when it exceeds `limit`.
pub fn enumerate(p: u64, orbits: bool, limit: u128) -> Result<EnumerationSummary> {
    let field = Field::prime(p)?;
    let grid = (p as u128).pow(8);
    if grid > limit {
        return Err(Error::GridTooLarge(grid, limit));
    }
    let elements: Vec<FieldElement> = field.elements().expect("prime field").collect();

    #[cfg(feature = "parallel")]
    let shards = elements.par_iter().map(|t0| shard(&elements, t0, orbits)).reduce(Shard::default, Shard::merge);
    #[cfg(not(feature = "parallel"))]
    let shards = elements.iter().map(|t0| shard(&elements, t0, orbits)).fold(Shard::default(), Shard::merge);

    Ok(EnumerationSummary {
        p,
        grid,
        distinct: shards.distinct,
        nonzero: shards.nonzero,
        admissible: shards.admissible,
        orbits: orbits.then(|| OrbitSummary {
            count: shards.orbit_sizes.values().sum(),
            sizes: shards.orbit_sizes,
        }),
    })
}

/// Triples of pairwise distinct elements, in lexicographic order, with a fixed first entry.
fn distinct_triples<'a>(elements: &'a [FieldElement], first: &'a FieldElement) -> impl Iterator<Item = [FieldElement; 3]> + 'a {
    elements.iter().flat_map(move |b| {
        elements
            .iter()
            .filter(move |c| first != b && first != *c && b != *c)
            .map(move |c| [first.clone(), b.clone(), c.clone()])
    })
}

fn shard(elements: &[FieldElement], t0: &FieldElement, orbits: bool) -> Shard {
    let mut out = Shard::default();
    let p = elements.len() as u64;
    for theta in distinct_triples(elements, t0) {
        for s0 in elements {
            for thetastar in distinct_triples(elements, s0) {
                // Arrays failing (i) are skipped wholesale; the p^2 split-eigenvalue
                // choices for this pair all pass it.
                out.distinct += p * p;
                for varphi in elements {
                    for phi in elements {
                        let pa = ParameterArray {
                            theta: theta.clone(),
                            thetastar: thetastar.clone(),
                            varphi: varphi.clone(),
                            phi: phi.clone(),
                        };
                        let report = admissible(&pa);
                        if !report.failed.iter().any(|f| f == "(ii)") {
                            out.nonzero += 1;
                        }
                        if !report.ok {
                            continue;
                        }
                        out.admissible += 1;
                        if orbits {
                            if let Some(size) = orbit_size_if_representative(&pa) {
                                *out.orbit_sizes.entry(size).or_default() += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The D4 orbit size of `pa` when `pa` is the least element of its orbit.
fn orbit_size_if_representative(pa: &ParameterArray) -> Option<usize> {
    let mut images: Vec<ParameterArray> =
        D4Element::all().iter().map(|g| relative(pa, &g.canonical_word())).collect();
    images.sort();
    images.dedup();
    (images[0] == *pa).then_some(images.len())
}
