//! Whole-complex checks: simplicial links against homotopy-link models, and
//! links of glued complexes against Mayer–Vietoris.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::complex::{glue, subcomplex_by_names, StratComplex, Subcomplex};
use crate::error::Result;
use crate::flags::RegularFlag;
use crate::homology::{homology, mayer_vietoris_check, BettiTable, Coefficients, MvReport};
use crate::neighborhoods::{holink_model, simplicial_link, subdivided};

/// Homology of `Link_I` and of the holink model for one flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkComparison {
    pub flag: RegularFlag,
    pub flag_text: String,
    pub link_int: BettiTable,
    pub holink_int: BettiTable,
    pub link_rat: BettiTable,
    pub holink_rat: BettiTable,
    /// Both models have no simplices.
    pub empty: bool,
}

impl LinkComparison {
    pub fn passed(&self) -> bool {
        self.link_int == self.holink_int && self.link_rat == self.holink_rat
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkReport {
    pub records: Vec<LinkComparison>,
}

impl LinkReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(LinkComparison::passed)
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.passed()).count()
    }
}

impl fmt::Display for LinkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            let verdict = if r.passed() { "pass" } else { "FAIL" };
            let note = if r.empty { " (empty)" } else { "" };
            writeln!(
                f,
                "{} {verdict}{note}: link {} | holink {} | rational link {} | rational holink {}",
                r.flag_text,
                r.link_int.lines().join("; "),
                r.holink_int.lines().join("; "),
                r.link_rat.betti_string(),
                r.holink_rat.betti_string(),
            )?;
        }
        write!(
            f,
            "{}/{} flags pass",
            self.records.len() - self.failures(),
            self.records.len()
        )
    }
}

/// Flags to check: the given ones, or every regular flag of the poset.
fn flags_or_all(k: &StratComplex, flags: Option<&[RegularFlag]>) -> Vec<RegularFlag> {
    flags.map_or_else(|| k.poset().regular_flags(), <[RegularFlag]>::to_vec)
}

/// Compares `Link_I(K)` with the holink model of `K` for each flag, over the
/// integers and the rationals.
pub fn compare_links(k: &StratComplex, flags: Option<&[RegularFlag]>) -> Result<LinkReport> {
    let sd = k.barycentric_subdivision();
    let records = flags_or_all(k, flags)
        .par_iter()
        .map(|flag| {
            let link = simplicial_link(&sd, flag)?.to_complex(&sd.complex);
            let model = holink_model(&sd, flag)?.complex;
            Ok(LinkComparison {
                flag: flag.clone(),
                flag_text: flag.display(k.poset()),
                link_int: homology(&link, Coefficients::Integers),
                holink_int: homology(&model, Coefficients::Integers),
                link_rat: homology(&link, Coefficients::Rationals),
                holink_rat: homology(&model, Coefficients::Rationals),
                empty: link.is_empty() && model.is_empty(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinkReport { records })
}

/// Mayer–Vietoris data of the link decomposition for one flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutLinkRecord {
    pub flag: RegularFlag,
    pub flag_text: String,
    pub report: MvReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutReport {
    /// Simplex counts of the glued complex.
    pub counts: Vec<usize>,
    pub records: Vec<PushoutLinkRecord>,
}

impl PushoutReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.report.passed())
    }

    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.report.passed()).count()
    }
}

impl fmt::Display for PushoutReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        writeln!(f, "glued complex: {} simplices by dimension", counts.join("/"))?;
        for r in &self.records {
            let verdict = if r.report.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{} {verdict}: {}", r.flag_text, r.report)?;
        }
        write!(
            f,
            "{}/{} flags pass",
            self.records.len() - self.failures(),
            self.records.len()
        )
    }
}

/// Glues `b` onto `x` along `a` and checks, for each flag `I`, that
/// `Link_I(Y)` splits as `Link_I(X) ∪ Link_I(B)` over `Link_I(A)` with an
/// exact rational Mayer–Vietoris sequence and additive Euler characteristic.
pub fn check_pushout(
    x: &StratComplex,
    b: &StratComplex,
    a: &Subcomplex,
    embed: &BTreeMap<String, String>,
    flags: Option<&[RegularFlag]>,
) -> Result<PushoutReport> {
    let glued = glue(x, b, a, embed)?;
    let y = &glued.complex;
    let sd = y.barycentric_subdivision();
    let pieces = [
        subdivided(&sd, &glued.x_image),
        subdivided(&sd, &glued.b_image),
        subdivided(&sd, &glued.a_image),
    ];
    let records = flags_or_all(y, flags)
        .par_iter()
        .map(|flag| {
            let link_y = simplicial_link(&sd, flag)?;
            let whole = link_y.to_complex(&sd.complex);
            let parts = pieces
                .iter()
                .map(|p| subcomplex_by_names(&whole, &link_y.intersection(p).to_complex(&sd.complex)))
                .collect::<Result<Vec<_>>>()?;
            let report = mayer_vietoris_check(&whole, &parts[0], &parts[1], &parts[2])?;
            Ok(PushoutLinkRecord {
                flag: flag.clone(),
                flag_text: flag.display(y.poset()),
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PushoutReport {
        counts: y.counts(),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn cone_links_agree() {
        let k = corpus::cone_on_circle().unwrap();
        let report = compare_links(&k, None).unwrap();
        assert!(report.passed(), "{report}");
        let ab = report
            .records
            .iter()
            .find(|r| r.flag.len() == 2)
            .unwrap();
        assert_eq!(ab.link_int.betti(), vec![1, 1]);
    }

    #[test]
    fn empty_stratum_is_noted() {
        let p = corpus::chain_poset(3);
        let flag = crate::flags::Flag::parse(&p, "0,1").unwrap();
        let k = corpus::stratified_simplex(p, &flag).unwrap();
        let report = compare_links(&k, None).unwrap();
        assert!(report.passed());
        assert!(report.records.iter().any(|r| r.empty));
    }

    #[test]
    fn pushouts_pass() {
        for po in corpus::pushouts().unwrap() {
            let report = check_pushout(&po.x, &po.b, &po.a, &po.embed, None).unwrap();
            assert!(report.passed(), "{}: {report}", po.name);
        }
    }
}
