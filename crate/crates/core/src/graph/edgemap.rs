//! Serde adapter writing an edge-keyed map as a list of `[u, v, value]` triples.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn serialize<S: Serializer, T: Serialize + Copy>(map: &BTreeMap<(usize, usize), T>, s: S) -> Result<S::Ok, S::Error> {
    let triples: Vec<(usize, usize, T)> = map.iter().map(|(&(u, v), &t)| (u, v, t)).collect();
    triples.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>, T: Deserialize<'de>>(d: D) -> Result<BTreeMap<(usize, usize), T>, D::Error> {
    let triples: Vec<(usize, usize, T)> = Vec::deserialize(d)?;
    Ok(triples.into_iter().map(|(u, v, t)| ((u, v), t)).collect())
}
