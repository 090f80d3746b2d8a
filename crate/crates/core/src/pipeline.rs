//! The group, signature, vector and class data shared by every command.

use crate::braid::{strata, StratumPartition};
use crate::error::Result;
use crate::genvec::{aut_classes, enumerate_vectors, genus, GenVector, Signature, VectorClass};
use crate::group::{automorphisms, Automorphism, GroupTable};

pub struct Pipeline {
    pub group: GroupTable,
    pub signature: Signature,
    pub automorphisms: Vec<Automorphism>,
    pub vectors: Vec<GenVector>,
    pub classes: Vec<VectorClass>,
}

impl Pipeline {
    pub fn new(group: GroupTable, signature: Signature) -> Pipeline {
        let automorphisms = automorphisms(&group);
        let vectors = enumerate_vectors(&group, &signature);
        let classes = aut_classes(&automorphisms, &vectors);
        Pipeline {
            group,
            signature,
            automorphisms,
            vectors,
            classes,
        }
    }

    /// Genus, or `None` when the signature cannot occur for this group order.
    pub fn genus(&self) -> Option<u64> {
        genus(&self.group, &self.signature).ok()
    }

    pub fn strata(&self) -> Result<StratumPartition> {
        strata(&self.group, &self.automorphisms, &self.signature, &self.classes)
    }

    pub fn representatives(&self) -> Vec<GenVector> {
        self.classes.iter().map(|c| c.representative).collect()
    }
}
