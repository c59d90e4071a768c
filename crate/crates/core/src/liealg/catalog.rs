//! Catalog of standard nilpotent Lie (super)algebras.
//!
//! - `h5`, `h6`: the 5- and 6-dimensional algebras of the classification.
//! - `filiform:n` (n >= 3): standard filiform `L_n`, `[e1, ei] = e_{i+1}`.
//! - `heis:n` (n >= 1): Heisenberg `H_{2n+1}` on basis `x1..xn, y1..yn, h`
//!   with the standard symplectic form, `[xi, yi] = h`.
//! - `heis_super:even,p,q`: Heisenberg superalgebra with even form; even part
//!   `H_{2p+1}`, odd part `z1..zq` with `[zi, zj] = delta_ij h`.
//! - `heis_super:odd,m`: Heisenberg superalgebra with odd form; abelian even
//!   part `x1..xm` paired with odd `y1..ym` by `[xi, yj] = delta_ij h`,
//!   `h` odd.
//! - `abelian:n0[,n1]`.
//!
//! Parameter syntax accepts positional values (`filiform:6`) or `k=v` pairs
//! (`filiform:n=6`), comma separated.

use super::{table, table_vec, LieSuperAlgebra, SparseEntry};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSpec {
    H5,
    H6,
    Filiform { n: usize },
    Heisenberg { n: usize },
    HeisenbergSuperEven { p: usize, q: usize },
    HeisenbergSuperOdd { m: usize },
    Abelian { n0: usize, n1: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("invalid parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },
}

fn bad(name: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::BadParams { name: name.to_string(), reason: reason.into() }
}

/// Parse `name` or `name:params` with positional or `k=v` parameters.
pub fn parse_catalog_spec(s: &str) -> Result<CatalogSpec, CatalogError> {
    let (name, rest) = match s.split_once(':') {
        Some((n, r)) => (n.trim(), Some(r.trim())),
        None => (s.trim(), None),
    };
    let tokens: Vec<&str> = rest
        .map(|r| r.split(',').map(str::trim).filter(|t| !t.is_empty()).collect())
        .unwrap_or_default();

    // positional values plus k=v lookups
    let positional: Vec<&str> = tokens.iter().filter(|t| !t.contains('=')).copied().collect();
    let keyed = |key: &str| -> Option<&str> {
        tokens.iter().find_map(|t| {
            t.split_once('=').and_then(|(k, v)| (k.trim() == key).then_some(v.trim()))
        })
    };
    let num = |name: &str, key: &str, pos: usize| -> Result<Option<usize>, CatalogError> {
        let raw = keyed(key).or_else(|| positional.get(pos).copied());
        match raw {
            None => Ok(None),
            Some(v) => v
                .parse::<usize>()
                .map(Some)
                .map_err(|_| bad(name, format!("{key} must be a nonnegative integer, got {v:?}"))),
        }
    };

    match name {
        "h5" => Ok(CatalogSpec::H5),
        "h6" => Ok(CatalogSpec::H6),
        "filiform" => {
            let n = num("filiform", "n", 0)?.ok_or_else(|| bad("filiform", "missing n"))?;
            if n < 3 {
                return Err(bad("filiform", "n must be at least 3"));
            }
            Ok(CatalogSpec::Filiform { n })
        }
        "heis" => {
            let n = num("heis", "n", 0)?.ok_or_else(|| bad("heis", "missing n"))?;
            if n < 1 {
                return Err(bad("heis", "n must be at least 1"));
            }
            Ok(CatalogSpec::Heisenberg { n })
        }
        "heis_super" => {
            let parity = keyed("parity")
                .or_else(|| positional.first().copied())
                .ok_or_else(|| bad("heis_super", "missing parity (even|odd)"))?;
            match parity {
                "even" => {
                    let p = num("heis_super", "p", 1)?
                        .ok_or_else(|| bad("heis_super", "missing p"))?;
                    let q = num("heis_super", "q", 2)?
                        .ok_or_else(|| bad("heis_super", "missing q"))?;
                    if q < 1 {
                        return Err(bad("heis_super", "q must be at least 1"));
                    }
                    Ok(CatalogSpec::HeisenbergSuperEven { p, q })
                }
                "odd" => {
                    let m = num("heis_super", "m", 1)?
                        .ok_or_else(|| bad("heis_super", "missing m"))?;
                    if m < 1 {
                        return Err(bad("heis_super", "m must be at least 1"));
                    }
                    Ok(CatalogSpec::HeisenbergSuperOdd { m })
                }
                other => Err(bad("heis_super", format!("parity must be even or odd, got {other:?}"))),
            }
        }
        "abelian" => {
            let n0 = num("abelian", "n0", 0)?.ok_or_else(|| bad("abelian", "missing n0"))?;
            let n1 = num("abelian", "n1", 1)?.unwrap_or(0);
            Ok(CatalogSpec::Abelian { n0, n1 })
        }
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

/// Construct the named algebra. All catalog algebras validate.
pub fn catalog(spec: &CatalogSpec) -> Result<LieSuperAlgebra, CatalogError> {
    let g = match spec {
        CatalogSpec::H5 => table(
            5,
            0,
            None,
            &[(0, 1, &[(2, 1)]), (0, 2, &[(3, 1)]), (1, 2, &[(4, 1)])],
        ),
        CatalogSpec::H6 => table(
            6,
            0,
            None,
            &[(0, 1, &[(2, 1)]), (0, 3, &[(4, 1)]), (1, 3, &[(5, 1)])],
        ),
        CatalogSpec::Filiform { n } => {
            let entries: Vec<SparseEntry> =
                (1..n - 1).map(|i| (0, i, vec![(i + 1, 1)])).collect();
            table_vec(*n, 0, None, entries)
        }
        CatalogSpec::Heisenberg { n } => heisenberg(*n),
        CatalogSpec::HeisenbergSuperEven { p, q } => {
            let n0 = 2 * p + 1;
            let h = n0 - 1;
            let mut names: Vec<String> = (1..=*p).map(|i| format!("x{i}")).collect();
            names.extend((1..=*p).map(|i| format!("y{i}")));
            names.push("h".to_string());
            names.extend((1..=*q).map(|i| format!("z{i}")));
            let mut entries: Vec<SparseEntry> =
                (0..*p).map(|i| (i, p + i, vec![(h, 1)])).collect();
            for k in 0..*q {
                entries.push((n0 + k, n0 + k, vec![(h, 1)]));
            }
            table_vec(n0, *q, Some(names), entries)
        }
        CatalogSpec::HeisenbergSuperOdd { m } => {
            let mut names: Vec<String> = (1..=*m).map(|i| format!("x{i}")).collect();
            names.extend((1..=*m).map(|i| format!("y{i}")));
            names.push("h".to_string());
            let h = 2 * m;
            let entries: Vec<SparseEntry> =
                (0..*m).map(|i| (i, m + i, vec![(h, 1)])).collect();
            table_vec(*m, m + 1, Some(names), entries)
        }
        CatalogSpec::Abelian { n0, n1 } => LieSuperAlgebra::abelian(*n0, *n1),
    };
    debug_assert_eq!(g.validate(), Ok(()));
    Ok(g)
}

fn heisenberg(n: usize) -> LieSuperAlgebra {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("y{i}")));
    names.push("h".to_string());
    let h = 2 * n;
    let entries: Vec<SparseEntry> =
        (0..n).map(|i| (i, n + i, vec![(h, 1)])).collect();
    table_vec(2 * n + 1, 0, Some(names), entries)
}

/// The named algebras exercised by the test suite, with stable labels.
pub fn test_catalog() -> Vec<(String, LieSuperAlgebra)> {
    let mut specs: Vec<(String, CatalogSpec)> = vec![
        ("h5".into(), CatalogSpec::H5),
        ("h6".into(), CatalogSpec::H6),
    ];
    for n in 3..=8 {
        specs.push((format!("filiform:{n}"), CatalogSpec::Filiform { n }));
    }
    for n in 1..=4 {
        specs.push((format!("heis:{n}"), CatalogSpec::Heisenberg { n }));
    }
    specs.push(("heis_super:even,1,1".into(), CatalogSpec::HeisenbergSuperEven { p: 1, q: 1 }));
    specs.push(("heis_super:even,2,2".into(), CatalogSpec::HeisenbergSuperEven { p: 2, q: 2 }));
    specs.push(("heis_super:odd,1".into(), CatalogSpec::HeisenbergSuperOdd { m: 1 }));
    specs.push(("heis_super:odd,2".into(), CatalogSpec::HeisenbergSuperOdd { m: 2 }));
    specs.push(("abelian:4".into(), CatalogSpec::Abelian { n0: 4, n1: 0 }));
    specs.push(("abelian:2,2".into(), CatalogSpec::Abelian { n0: 2, n1: 2 }));
    specs
        .into_iter()
        .map(|(label, spec)| (label, catalog(&spec).unwrap()))
        .collect()
}
