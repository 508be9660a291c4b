//! Loading instances, groupoids and colorings from files or short names.

use std::path::Path;

use polyring_core::algebras::{
    direct_product, FiniteGroupoid, FinitePolyring, GroupoidFile, InstanceFile, SymbolicFile, SymbolicPolyring,
};
use polyring_core::ramsey::Coloring;
use polyring_core::zariski::boolean_power;
use serde::de::DeserializeOwned;

use crate::CliError;

fn read_json<T: DeserializeOwned>(path: &str) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{path}: {e}")))
}

fn number(s: &str, what: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| CliError::Invalid(format!("bad {what} `{s}`")))
}

/// `zM-group`, `zM-ring`, `f2^M`, or a path to an instance file.
pub fn finite_instance(name: &str) -> Result<FinitePolyring, CliError> {
    if Path::new(name).exists() {
        let file: InstanceFile = read_json(name)?;
        return Ok(FinitePolyring::try_from(file)?);
    }
    if let Some(m) = name.strip_prefix("f2^") {
        return Ok(boolean_power(number(m, "exponent")? as u32)?);
    }
    if let Some(rest) = name.strip_prefix('z') {
        if let Some((m, kind)) = rest.split_once('-') {
            let m = number(m, "modulus")?;
            if m == 0 || m > 1 << 12 {
                return Err(CliError::Invalid(format!("modulus {m} out of range")));
            }
            match kind {
                "group" => return Ok(FinitePolyring::cyclic_group(m)),
                "ring" => return Ok(FinitePolyring::cyclic_ring(m)),
                _ => {}
            }
        }
    }
    if let Some(parts) = name.strip_prefix("product:") {
        let factors = parts.split(',').map(finite_instance).collect::<Result<Vec<_>, _>>()?;
        return Ok(direct_product(&factors)?);
    }
    Err(CliError::Invalid(format!("no instance file or known instance named `{name}`")))
}

/// `integers`, `integer-ring`, or a path to a symbolic instance file.
pub fn symbolic_instance(name: &str) -> Result<SymbolicPolyring, CliError> {
    match name {
        "integers" => Ok(SymbolicPolyring::integers()),
        "integer-ring" => Ok(SymbolicPolyring::integer_ring()),
        path => {
            let file: SymbolicFile = read_json(path)?;
            Ok(SymbolicPolyring::try_from(file)?)
        }
    }
}

/// `zM-mul`, `zM-add`, `left-zero-N`, `right-zero-N`, `null-N`, or a path
/// to a groupoid file.
pub fn groupoid(name: &str) -> Result<FiniteGroupoid, CliError> {
    if Path::new(name).exists() {
        let file: GroupoidFile = read_json(name)?;
        return Ok(FiniteGroupoid::try_from(file)?);
    }
    let sized = |n: &str| -> Result<usize, CliError> {
        let n = number(n, "order")?;
        if n == 0 || n > 1 << 10 {
            return Err(CliError::Invalid(format!("order {n} out of range")));
        }
        Ok(n)
    };
    if let Some(n) = name.strip_prefix("left-zero-") {
        return Ok(FiniteGroupoid::left_zero(sized(n)?));
    }
    if let Some(n) = name.strip_prefix("right-zero-") {
        return Ok(FiniteGroupoid::right_zero(sized(n)?));
    }
    if let Some(n) = name.strip_prefix("null-") {
        return Ok(FiniteGroupoid::null(sized(n)?));
    }
    if let Some(n) = name.strip_prefix('z').and_then(|r| r.strip_suffix("-mul")) {
        return Ok(FiniteGroupoid::cyclic_mul(sized(n)?));
    }
    if let Some(n) = name.strip_prefix('z').and_then(|r| r.strip_suffix("-add")) {
        return Ok(FiniteGroupoid::cyclic_add(sized(n)?));
    }
    Err(CliError::Invalid(format!("no groupoid file or known groupoid named `{name}`")))
}

pub fn int_list(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| CliError::Invalid(format!("bad integer `{t}`"))))
        .collect()
}

fn dims(s: &str) -> Result<Vec<u64>, CliError> {
    s.split('x')
        .map(|t| t.parse().map_err(|_| CliError::Invalid(format!("bad grid size `{s}`"))))
        .collect()
}

fn csv_rows(path: &str) -> Result<Vec<Vec<u64>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
        // a header line such as `element,color` is skipped
        if rows.is_empty() && rec.iter().any(|f| f.parse::<u64>().is_err()) {
            continue;
        }
        let row = rec
            .iter()
            .map(|f| f.parse().map_err(|_| CliError::Invalid(format!("{path}: bad field `{f}`"))))
            .collect::<Result<Vec<u64>, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// An interval coloring: `single:N`, `parity:N`, `mod:K:N`, `random:K:N`
/// (seeded by `seed`), or a CSV file of `element,color` rows.
pub fn coloring(name: &str, seed: u64) -> Result<Coloring, CliError> {
    if Path::new(name).exists() {
        let pairs = csv_rows(name)?
            .into_iter()
            .map(|r| match r[..] {
                [x, c] => u32::try_from(c)
                    .map(|c| (x, c))
                    .map_err(|_| CliError::Invalid(format!("color {c} too large"))),
                _ => Err(CliError::Invalid("expected `element,color` rows".into())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Coloring::from_pairs(&pairs)?);
    }
    let parts: Vec<&str> = name.split(':').collect();
    let n = |s: &str| s.parse::<u64>().map_err(|_| CliError::Invalid(format!("bad size `{s}`")));
    let k = |s: &str| s.parse::<u32>().map_err(|_| CliError::Invalid(format!("bad color count `{s}`")));
    Ok(match parts[..] {
        ["single", size] => Coloring::single(n(size)?),
        ["parity", size] => Coloring::parity(n(size)?),
        ["mod", m, size] => Coloring::residue(n(size)?, k(m)?)?,
        ["random", m, size] => Coloring::random(n(size)?, k(m)?, seed)?,
        _ => return Err(CliError::Invalid(format!("unknown coloring `{name}`"))),
    })
}

/// A grid coloring: `single:AxB..`, `parity:AxB..` (parity of the
/// coordinate sum), `mod:K:AxB..`, `random:K:AxB..`, or a CSV file of
/// `c_1,..,c_d,color` rows covering the grid.
pub fn grid_coloring(name: &str, seed: u64) -> Result<Coloring, CliError> {
    use rand::{Rng, SeedableRng};
    if Path::new(name).exists() {
        let rows = csv_rows(name)?;
        let d = rows.first().map_or(0, |r| r.len().saturating_sub(1));
        if d == 0 || rows.iter().any(|r| r.len() != d + 1) {
            return Err(CliError::Invalid("expected `c_1,..,c_d,color` rows".into()));
        }
        let dims: Vec<u64> = (0..d).map(|i| rows.iter().map(|r| r[i]).max().unwrap_or(0)).collect();
        let cells = dims.iter().try_fold(1u64, |a, &n| a.checked_mul(n)).unwrap_or(u64::MAX);
        if cells != rows.len() as u64 {
            return Err(CliError::Invalid("grid coloring is not total".into()));
        }
        let mut colors = vec![None; cells as usize];
        for r in &rows {
            if r[..d].contains(&0) {
                return Err(CliError::Invalid("grid coordinates start at 1".into()));
            }
            let idx = r[..d].iter().zip(&dims).fold(0u64, |acc, (&p, &n)| acc * n + p - 1);
            if colors[idx as usize].replace(r[d] as u32).is_some() {
                return Err(CliError::Invalid(format!("grid point {:?} listed twice", &r[..d])));
            }
        }
        let colors: Vec<u32> = colors
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| CliError::Invalid("grid coloring is not total".into()))?;
        let count = colors.iter().max().map_or(1, |&c| c + 1);
        return Ok(Coloring::new(polyring_core::ramsey::Domain::Grid { dims }, count, colors)?);
    }
    let parts: Vec<&str> = name.split(':').collect();
    let k = |s: &str| s.parse::<u32>().map_err(|_| CliError::Invalid(format!("bad color count `{s}`")));
    Ok(match parts[..] {
        ["single", g] => Coloring::grid_from_fn(&dims(g)?, 1, |_| 0)?,
        ["parity", g] => Coloring::grid_from_fn(&dims(g)?, 2, |p| (p.iter().sum::<u64>() % 2) as u32)?,
        ["mod", m, g] => {
            let m = k(m)?.max(1);
            Coloring::grid_from_fn(&dims(g)?, m, |p| (p.iter().sum::<u64>() % m as u64) as u32)?
        }
        ["random", m, g] => {
            let m = k(m)?.max(1);
            let dims = dims(g)?;
            let cells = dims.iter().try_fold(1u64, |a, &d| a.checked_mul(d)).unwrap_or(u64::MAX);
            if cells > 1 << 24 {
                return Err(CliError::Invalid(format!("grid `{g}` is too large")));
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let colors = (0..cells).map(|_| rng.gen_range(0..m)).collect();
            Coloring::new(polyring_core::ramsey::Domain::Grid { dims }, m, colors)?
        }
        _ => return Err(CliError::Invalid(format!("unknown grid coloring `{name}`"))),
    })
}
