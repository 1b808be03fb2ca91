//! Standard neighborhoods, simplicial links and homotopy-link models.
//!
//! All subcomplexes live in the barycentric subdivision `sd(K)`; a barycenter
//! `b(σ)` is selected by a condition on the set of labels of `σ`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::{StratComplex, Subcomplex, Subdivision};
use crate::error::{Error, Result};
use crate::flags::RegularFlag;
use crate::poset::{Label, Poset};

/// Whether a barycenter with carrier labels `labels` belongs to the standard
/// neighborhood of `p`: `p` is among the labels, or all labels lie below `p`.
pub fn stan_hood_condition(poset: &Poset, labels: &[Label], p: Label) -> bool {
    labels.contains(&p) || labels.iter().all(|&q| poset.lt(q, p))
}

fn check_label(poset: &Poset, p: Label) -> Result<()> {
    if poset.contains(p) {
        Ok(())
    } else {
        Err(Error::UnknownElement(format!("#{}", p.index())))
    }
}

fn check_flag(poset: &Poset, flag: &RegularFlag) -> Result<()> {
    flag.entries().iter().try_for_each(|&p| check_label(poset, p))
}

/// The simplicial standard neighborhood `S_p` of the `p`-stratum.
pub fn sim_stan_hood(sd: &Subdivision, p: Label) -> Result<Subcomplex> {
    let poset = sd.complex.poset();
    check_label(poset, p)?;
    Ok(sd.full_subcomplex(|labels| stan_hood_condition(poset, labels, p)))
}

/// `S_I`, the intersection of the neighborhoods of the entries of `I`.
pub fn stan_hood_flag(sd: &Subdivision, flag: &RegularFlag) -> Result<Subcomplex> {
    let poset = sd.complex.poset();
    check_flag(poset, flag)?;
    Ok(sd.full_subcomplex(|labels| {
        flag.entries()
            .iter()
            .all(|&p| stan_hood_condition(poset, labels, p))
    }))
}

/// `Link_I`: barycenters of simplices whose label set is exactly `I`.
pub fn simplicial_link(sd: &Subdivision, flag: &RegularFlag) -> Result<Subcomplex> {
    check_flag(sd.complex.poset(), flag)?;
    Ok(sd.full_subcomplex(|labels| {
        labels.len() == flag.len() && flag.entries().iter().all(|p| labels.contains(p))
    }))
}

/// Full subcomplex of `sd(K)` on barycenters of simplices reaching `≥ p`.
pub fn stratum_ge_model(k: &StratComplex, p: Label) -> Result<StratComplex> {
    check_label(k.poset(), p)?;
    let sd = k.barycentric_subdivision().complex;
    let poset = sd.poset();
    Ok(sd.induced(|v| poset.leq(p, sd.label(v))))
}

/// Combinatorial model of the homotopy link `Hol_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolinkModel {
    pub flag: RegularFlag,
    pub complex: StratComplex,
    pub provenance: Vec<String>,
}

/// The `≥ max(I)` stratum model of the standard neighborhood `S_I`.
pub fn holink_model(sd: &Subdivision, flag: &RegularFlag) -> Result<HolinkModel> {
    let poset = sd.complex.poset();
    let hood = stan_hood_flag(sd, flag)?;
    let hood_complex = hood.to_complex(&sd.complex);
    let top = flag.top();
    let complex = stratum_ge_model(&hood_complex, top)?;
    let counts = |k: &StratComplex| {
        k.counts()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("/")
    };
    let provenance = vec![
        format!("sd(K): {} simplices", sd.complex.num_simplices()),
        format!(
            "S_{}: {} simplices ({})",
            flag.display(poset),
            hood.len(),
            counts(&hood_complex)
        ),
        format!(
            "sd(S_{})_>={}: {} simplices ({})",
            flag.display(poset),
            poset.name(top),
            complex.num_simplices(),
            counts(&complex)
        ),
    ];
    Ok(HolinkModel {
        flag: flag.clone(),
        complex,
        provenance,
    })
}

/// An inclusion `model(I) ⊂ model(I')` for `I' ⊊ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMap {
    pub from: RegularFlag,
    pub to: RegularFlag,
    pub holds: bool,
}

/// Holink models for every regular flag of the poset, with the inclusions
/// between them.
#[derive(Clone, Debug)]
pub struct ComplementDiagram {
    pub models: BTreeMap<RegularFlag, HolinkModel>,
    pub maps: Vec<StructureMap>,
}

impl ComplementDiagram {
    pub fn structure_maps_hold(&self) -> bool {
        self.maps.iter().all(|m| m.holds)
    }
}

pub fn regular_complement_diagram(k: &StratComplex) -> ComplementDiagram {
    let sd = k.barycentric_subdivision();
    let flags = k.poset().regular_flags();
    let models: Vec<HolinkModel> = flags
        .par_iter()
        .map(|f| holink_model(&sd, f).expect("flags of the complex's own poset"))
        .collect();
    let mut maps = Vec::new();
    for (i, big) in flags.iter().enumerate() {
        for (j, small) in flags.iter().enumerate() {
            if i != j && small.is_subflag_of(big) {
                maps.push(StructureMap {
                    from: big.clone(),
                    to: small.clone(),
                    holds: models[i].complex.is_named_subcomplex_of(&models[j].complex),
                });
            }
        }
    }
    ComplementDiagram {
        models: flags.into_iter().zip(models).collect(),
        maps,
    }
}

/// The simplices of `sd(K)` whose vertices are all barycenters of simplices
/// of the subcomplex `z` of `K`, i.e. `sd(z)` inside `sd(K)`.
pub fn subdivided(sd: &Subdivision, z: &Subcomplex) -> Subcomplex {
    Subcomplex::full(&sd.complex, |v| z.contains(sd.carrier(v)))
}
