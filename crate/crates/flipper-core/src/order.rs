//! Total orders on vertex identifiers.
//!
//! Tie-breaking throughout the crate (canonical representatives, minima of
//! parts, witness selection) is done against one of these orders. The
//! default is ascending identifiers; a permutation can be supplied instead.

use crate::error::{Error, Result};
use crate::set::{Vertex, VertexSet};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum VertexOrder {
    /// rank(v) = v.
    #[default]
    Identity,
    /// rank[v] = position of v in the supplied sequence.
    Permutation { rank: Vec<usize> },
}

impl VertexOrder {
    /// Builds the order in which `seq[0]` is least. `seq` must be a
    /// permutation of 0..seq.len().
    pub fn from_sequence(seq: &[Vertex]) -> Result<Self> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidOrder);
            }
            rank[v] = i;
        }
        Ok(VertexOrder::Permutation { rank })
    }

    /// Position of `v`; vertices beyond a permutation's domain sort after it,
    /// by identifier.
    pub fn rank(&self, v: Vertex) -> usize {
        match self {
            VertexOrder::Identity => v,
            VertexOrder::Permutation { rank } => {
                rank.get(v).copied().unwrap_or(rank.len() + v)
            }
        }
    }

    pub fn covers(&self, universe: usize) -> bool {
        match self {
            VertexOrder::Identity => true,
            VertexOrder::Permutation { rank } => rank.len() >= universe,
        }
    }

    pub fn min_of(&self, set: &VertexSet) -> Option<Vertex> {
        match self {
            VertexOrder::Identity => set.first(),
            VertexOrder::Permutation { .. } => set.iter().min_by_key(|&v| self.rank(v)),
        }
    }

    pub fn sorted(&self, set: &VertexSet) -> Vec<Vertex> {
        let mut vs = set.to_vec();
        if let VertexOrder::Permutation { .. } = self {
            vs.sort_by_key(|&v| self.rank(v));
        }
        vs
    }

    pub fn le(&self, a: Vertex, b: Vertex) -> bool {
        self.rank(a) <= self.rank(b)
    }
}
