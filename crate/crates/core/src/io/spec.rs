use std::path::Path;
use std::str::FromStr;

use super::{read_grp, GroupFile, IoError};
use crate::construct::{
    affine_cyclic, conj_quandle, coset_quandle, tensor_quandle, wreath_companion, ConstructError,
    CosetQuandleSpec,
};
use crate::grp::{library, ExplicitGroup, GroupAutomorphism};
use crate::permgrp::PermGroup;
use crate::quandle::QuandleTable;

/// Automorphism named in a spec string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaSpec {
    Id,
    /// Conjugation `x ↦ g x g⁻¹` by an element written as in the group file.
    Inner(String),
    /// `x ↦ x^k`, for abelian groups.
    Power(i64),
}

impl ThetaSpec {
    fn resolve(&self, g: &ExplicitGroup) -> Result<GroupAutomorphism, IoError> {
        Ok(match self {
            ThetaSpec::Id => GroupAutomorphism::identity(g),
            ThetaSpec::Inner(e) => GroupAutomorphism::inner(g, g.parse_element(e)?),
            ThetaSpec::Power(k) => GroupAutomorphism::power_map(g, *k)?,
        })
    }
}

/// The subgroup `H` of a coset quandle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// `Fix(θ)`.
    Fix,
    /// `C_G(g)` for `θ = inner(g)`.
    Centralizer,
    Trivial,
}

/// A parsed construction, e.g. `tensor:a5.grp:t=2:theta=id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructSpec {
    /// `affine:Zn:f=k`
    Affine { n: usize, f: i64 },
    /// `conj:G:class=g`
    Conj { group: String, class: String },
    /// `coset:G:theta=..:H=fix|centralizer|trivial`
    Coset {
        group: String,
        theta: ThetaSpec,
        subgroup: SubgroupSpec,
    },
    /// `tensor:G:t=k:theta=..`
    Tensor { group: String, t: usize, theta: ThetaSpec },
}

fn spec_error(spec: &str, message: impl Into<String>) -> IoError {
    IoError::Spec {
        spec: spec.to_string(),
        message: message.into(),
    }
}

fn parse_theta(spec: &str, text: &str) -> Result<ThetaSpec, IoError> {
    if text == "id" {
        return Ok(ThetaSpec::Id);
    }
    let inner = |prefix: &str| {
        text.strip_prefix(prefix)
            .and_then(|r| r.strip_suffix(')'))
            .map(str::trim)
    };
    if let Some(e) = inner("inner(") {
        // `inner(0 1)` names the transposition; `inner((0 1)(2 3))` a product
        let e = if e.starts_with('(') { e.to_string() } else { format!("({e})") };
        return Ok(ThetaSpec::Inner(e));
    }
    if let Some(k) = inner("power(") {
        return k
            .parse()
            .map(ThetaSpec::Power)
            .map_err(|_| spec_error(spec, format!("bad exponent {k:?}")));
    }
    Err(spec_error(spec, format!("unknown automorphism {text:?}")))
}

impl FromStr for ConstructSpec {
    type Err = IoError;

    fn from_str(spec: &str) -> Result<Self, IoError> {
        let mut parts = spec.split(':').map(str::trim);
        let kind = parts.next().unwrap_or("");
        let object = parts
            .next()
            .filter(|s| !s.is_empty())
            .ok_or_else(|| spec_error(spec, "missing group"))?
            .to_string();
        let mut options = Vec::new();
        for part in parts {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| spec_error(spec, format!("expected key=value, found {part:?}")))?;
            options.push((k.trim().to_ascii_lowercase(), v.trim().to_string()));
        }
        let take = |key: &str| options.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
        let known: &[&str] = match kind {
            "affine" => &["f"],
            "conj" => &["class"],
            "coset" => &["theta", "h"],
            "tensor" => &["t", "theta"],
            _ => return Err(spec_error(spec, format!("unknown construction {kind:?}"))),
        };
        if let Some((k, _)) = options.iter().find(|(k, _)| !known.contains(&k.as_str())) {
            return Err(spec_error(spec, format!("unknown option {k:?}")));
        }
        match kind {
            "affine" => {
                let n = object
                    .strip_prefix(['Z', 'z'])
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| spec_error(spec, "affine needs Zn"))?;
                let f = take("f")
                    .ok_or_else(|| spec_error(spec, "missing f"))?
                    .parse()
                    .map_err(|_| spec_error(spec, "f must be an integer"))?;
                Ok(ConstructSpec::Affine { n, f })
            }
            "conj" => {
                let class = take("class").ok_or_else(|| spec_error(spec, "missing class"))?;
                Ok(ConstructSpec::Conj {
                    group: object,
                    class: class.to_string(),
                })
            }
            "coset" => {
                let theta = parse_theta(spec, take("theta").unwrap_or("id"))?;
                let subgroup = match take("h").unwrap_or("fix") {
                    "fix" => SubgroupSpec::Fix,
                    "centralizer" => SubgroupSpec::Centralizer,
                    "trivial" => SubgroupSpec::Trivial,
                    other => return Err(spec_error(spec, format!("unknown subgroup {other:?}"))),
                };
                if subgroup == SubgroupSpec::Centralizer && !matches!(theta, ThetaSpec::Inner(_)) {
                    return Err(spec_error(spec, "H=centralizer needs theta=inner(g)"));
                }
                Ok(ConstructSpec::Coset {
                    group: object,
                    theta,
                    subgroup,
                })
            }
            _ => {
                let t = take("t")
                    .ok_or_else(|| spec_error(spec, "missing t"))?
                    .parse()
                    .ok()
                    .filter(|&t: &usize| t >= 1)
                    .ok_or_else(|| spec_error(spec, "t must be a positive integer"))?;
                let theta = parse_theta(spec, take("theta").unwrap_or("id"))?;
                Ok(ConstructSpec::Tensor { group: object, t, theta })
            }
        }
    }
}

/// Output of [`build`]: a table, or for `(L, t, 1)` beyond the size cap the
/// permutation representation of `L^t ⋊ Z_t`.
#[derive(Clone, Debug)]
pub enum Constructed {
    Table(QuandleTable),
    Companion(PermGroup),
}

/// Loads a group file relative to `base`, falling back to the built-in
/// fixtures by file stem (`s3.grp`, `a5`, `Q8`).
pub fn load_group(name: &str, base: &Path) -> Result<GroupFile, IoError> {
    let path = base.join(name);
    if path.exists() {
        return read_grp(&path);
    }
    let stem = Path::new(name)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or(name)
        .to_ascii_lowercase();
    if let Some(g) = library::perm_fixture(&stem) {
        return Ok(GroupFile::Perm(g));
    }
    library::fixtures()
        .into_iter()
        .find(|(n, _)| n.to_ascii_lowercase() == stem)
        .map(|(_, g)| GroupFile::Table(g))
        .ok_or_else(|| IoError::File {
            path,
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file or fixture"),
        })
}

/// Builds a construction. `size_cap` bounds the quandle, `group_cap` the
/// enumeration of groups given by generators.
pub fn build(
    spec: &ConstructSpec,
    base: &Path,
    size_cap: usize,
    group_cap: usize,
) -> Result<Constructed, IoError> {
    let explicit = |name: &str| load_group(name, base)?.to_explicit(group_cap);
    let table = match spec {
        ConstructSpec::Affine { n, f } => {
            if *n > size_cap {
                return Err(ConstructError::CapExceeded(size_cap).into());
            }
            affine_cyclic(*n, *f)?
        }
        ConstructSpec::Conj { group, class } => {
            let g = explicit(group)?;
            let x = g.parse_element(class)?;
            conj_quandle(&g, &g.conjugacy_class(x).members)?.0
        }
        ConstructSpec::Coset {
            group,
            theta,
            subgroup,
        } => {
            let g = explicit(group)?;
            if g.order() > size_cap {
                return Err(ConstructError::CapExceeded(size_cap).into());
            }
            let auto = theta.resolve(&g)?;
            let h = match (subgroup, theta) {
                (SubgroupSpec::Fix, _) => auto.fixed_subgroup(),
                (SubgroupSpec::Trivial, _) => g.trivial_subgroup(),
                (SubgroupSpec::Centralizer, ThetaSpec::Inner(e)) => g.centralizer(g.parse_element(e)?),
                (SubgroupSpec::Centralizer, _) => unreachable!("rejected by the parser"),
            };
            coset_quandle(&CosetQuandleSpec::new(g, h, auto)?).table
        }
        ConstructSpec::Tensor { group, t, theta } => {
            let file = load_group(group, base)?;
            let g = file.to_explicit(group_cap)?;
            let auto = theta.resolve(&g)?;
            match tensor_quandle(&g, *t, &auto, size_cap) {
                Ok(q) => q.table,
                Err(ConstructError::CapExceeded(_)) if *theta == ThetaSpec::Id && *t > 1 => {
                    let companion = wreath_companion(&file.to_perm()?, *t)?;
                    return Ok(Constructed::Companion(companion.group));
                }
                Err(e) => return Err(e.into()),
            }
        }
    };
    Ok(Constructed::Table(table))
}
