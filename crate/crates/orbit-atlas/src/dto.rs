//! Serde-facing mirrors of the core types, fixing the JSON shape of every
//! enumeration dump and of the exported weak-order graph.

use serde::{Deserialize, Serialize};

use orbit_atlas_core::monoid::OrbitGraph;
use orbit_atlas_core::perm::Perm;
use orbit_atlas_core::pil::{PartialPerm, PilWithList};
use orbit_atlas_core::reps::{DecoratedPerm, FlagEntry, StandardFlag, StdPair};

/// Note attached to the two one-coordinate moves, whose orbit preservation
/// the source theory states without proof.
pub const SINGLE_SIDED_PROVENANCE: &str = "extended action (proof deferred)";

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DecoratedDto {
    pub w: Vec<usize>,
    pub delta: Vec<usize>,
}

impl From<&DecoratedPerm> for DecoratedDto {
    fn from(d: &DecoratedPerm) -> DecoratedDto {
        DecoratedDto {
            w: d.w().images().to_vec(),
            delta: d.delta().to_vec(),
        }
    }
}

impl DecoratedDto {
    pub fn to_core(&self) -> DecoratedPerm {
        DecoratedPerm::new(Perm::from_images(&self.w), self.delta.clone())
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct FlagEntryDto {
    pub idx: usize,
    pub hat: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct FlagDto {
    pub i: usize,
    pub entries: Vec<FlagEntryDto>,
}

impl From<&StandardFlag> for FlagDto {
    fn from(f: &StandardFlag) -> FlagDto {
        FlagDto {
            i: f.i(),
            entries: f
                .entries()
                .iter()
                .map(|e| FlagEntryDto {
                    idx: e.idx,
                    hat: e.hat,
                })
                .collect(),
        }
    }
}

impl FlagDto {
    pub fn to_core(&self) -> StandardFlag {
        StandardFlag::new(
            self.i,
            self.entries
                .iter()
                .map(|e| FlagEntry {
                    idx: e.idx,
                    hat: e.hat,
                })
                .collect(),
        )
    }
}

/// A pair of Weyl elements naming an orbit; `standardized` records whether
/// the second coordinate has been untwisted.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct PairDto {
    pub i: usize,
    pub w: Vec<usize>,
    pub u: Vec<usize>,
    pub standardized: bool,
}

impl From<&StdPair> for PairDto {
    fn from(p: &StdPair) -> PairDto {
        PairDto {
            i: p.i(),
            w: p.w().images().to_vec(),
            u: p.u().images().to_vec(),
            standardized: true,
        }
    }
}

impl PairDto {
    pub fn to_std_pair(&self) -> StdPair {
        assert!(self.standardized, "pair is not in standardized form");
        StdPair::new(
            self.i,
            Perm::from_images(&self.w),
            Perm::from_images(&self.u),
        )
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct PilDto {
    pub blocks: Vec<Vec<usize>>,
    pub distinguished: Option<usize>,
}

impl From<&PilWithList> for PilDto {
    fn from(p: &PilWithList) -> PilDto {
        PilDto {
            blocks: p.pil().blocks().to_vec(),
            distinguished: p.distinguished(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct PartialDto {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl From<&PartialPerm> for PartialDto {
    fn from(p: &PartialPerm) -> PartialDto {
        PartialDto {
            n: p.n(),
            pairs: p.pairs().to_vec(),
        }
    }
}

impl PartialDto {
    pub fn to_core(&self) -> PartialPerm {
        PartialPerm::new(self.n, self.pairs.clone())
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct GraphNodeDto {
    pub id: usize,
    pub pair: PairDto,
    pub level: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct GraphEdgeDto {
    pub src: usize,
    pub dst: usize,
    pub label: String,
    pub root_type: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub provenance: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct GraphDto {
    pub n: usize,
    pub i: usize,
    pub nodes: Vec<GraphNodeDto>,
    pub edges: Vec<GraphEdgeDto>,
    pub closure_only_edges: Vec<(usize, usize)>,
}

impl From<&OrbitGraph> for GraphDto {
    fn from(g: &OrbitGraph) -> GraphDto {
        GraphDto {
            n: g.n(),
            i: g.i(),
            nodes: g
                .nodes()
                .iter()
                .enumerate()
                .map(|(id, p)| GraphNodeDto {
                    id,
                    pair: PairDto::from(p),
                    level: g.levels()[id],
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| GraphEdgeDto {
                    src: e.src,
                    dst: e.dst,
                    label: e.label.name(),
                    root_type: e.root_type.name().to_string(),
                    provenance: e
                        .label
                        .is_single_sided()
                        .then(|| SINGLE_SIDED_PROVENANCE.to_string()),
                })
                .collect(),
            closure_only_edges: g.closure_only_edges(),
        }
    }
}
