//! Named graph families for the `generate` subcommand.

use cwkit_core::generators::{
    complete, cycle, gnp, hypercube, path, petersen, random_multipartite, random_tree, star, turan,
    turan_modular,
};
use cwkit_core::Graph;

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenFamily {
    Complete,
    Path,
    Cycle,
    Star,
    Petersen,
    Turan,
    TuranModular,
    Hypercube,
    Tree,
    Gnp,
    Multipartite,
}

#[derive(Debug, Clone, Default)]
pub struct GenParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub p: Option<f64>,
    pub seed: Option<u64>,
}

fn need<T>(v: Option<T>, what: &str, family: GenFamily) -> Result<T> {
    v.ok_or_else(|| HarnessError::Config(format!("{family:?} needs --{what}")))
}

pub fn generate(family: GenFamily, prm: &GenParams) -> Result<Graph> {
    let n = || need(prm.n, "n", family);
    let k = || need(prm.k, "k", family);
    let seed = || need(prm.seed, "seed", family);
    let p = || {
        let p = need(prm.p, "p", family)?;
        if (0.0..=1.0).contains(&p) {
            Ok(p)
        } else {
            Err(HarnessError::Config(format!("p = {p} outside [0, 1]")))
        }
    };
    Ok(match family {
        GenFamily::Complete => complete(n()?),
        GenFamily::Path => path(n()?),
        GenFamily::Cycle => {
            let n = n()?;
            if n < 3 {
                return Err(HarnessError::Config(format!("cycle needs n >= 3, got {n}")));
            }
            cycle(n)
        }
        GenFamily::Star => star(n()?),
        GenFamily::Petersen => petersen(),
        GenFamily::Turan => turan(n()?, k()?)?,
        GenFamily::TuranModular => turan_modular(n()?, k()?)?,
        GenFamily::Hypercube => hypercube(n()? as u32)?,
        GenFamily::Tree => random_tree(n()?, seed()?)?,
        GenFamily::Gnp => gnp(n()?, p()?, seed()?),
        GenFamily::Multipartite => random_multipartite(n()?, k()?, p()?, seed()?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_checks() {
        let prm = |n, k, p, seed| GenParams { n, k, p, seed };
        assert_eq!(generate(GenFamily::Turan, &prm(Some(12), Some(3), None, None)).unwrap().m(), 48);
        assert!(generate(GenFamily::Tree, &prm(Some(8), None, None, None)).is_err());
        assert!(generate(GenFamily::Gnp, &prm(Some(8), None, Some(1.5), Some(1))).is_err());
        assert_eq!(generate(GenFamily::Gnp, &prm(Some(8), None, Some(0.0), Some(1))).unwrap().m(), 0);
        assert!(generate(GenFamily::Cycle, &prm(Some(2), None, None, None)).is_err());
    }
}
