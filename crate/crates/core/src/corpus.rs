//! The shipped cases: configuration tables, construction plans, reference realizations
//! and expected results, embedded in the binary and installable to a directory.

use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde::Deserialize;
use thiserror::Error;

use crate::combinatorics::{parse_config_table, ConfigTable, Permutation};
use crate::field::{Poly, Rational};
use crate::moduli::{parse_plan, parse_ratfunc, ConstructionPlan};
use crate::witness::{MapKind, Status};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("unknown case {0:?}; run `cases` for the list")]
    UnknownCase(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Source files of one case: `(stem, .cfg, .plan, + realization, − realization)`.
struct Files {
    stem: &'static str,
    cfg: &'static str,
    plan: &'static str,
    plus: &'static str,
    minus: &'static str,
}

macro_rules! files {
    ($($stem:literal),* $(,)?) => {
        &[$(Files {
            stem: $stem,
            cfg: include_str!(concat!("../corpus/", $stem, ".cfg")),
            plan: include_str!(concat!("../corpus/", $stem, ".plan")),
            plus: include_str!(concat!("../corpus/", $stem, ".plus.arr")),
            minus: include_str!(concat!("../corpus/", $stem, ".minus.arr")),
        }),*]
    };
}

static FILES: &[Files] = files!(
    "case1",
    "case6",
    "case7",
    "maclane",
    "nazir-yoshinaga",
    "11B3b2iii",
    "11B3b2iv",
    "11B2iv",
    "falk-sturmfels",
);

const CASES_TOML: &str = include_str!("../corpus/cases.toml");

#[derive(Deserialize)]
struct Manifest {
    case: Vec<Entry>,
}

#[derive(Deserialize)]
struct Entry {
    name: String,
    file: String,
    sigma: String,
    grid: [usize; 4],
    map: String,
    aut_order: usize,
    constraint: String,
    #[serde(default)]
    constraint_derived: bool,
    root_product: String,
    status: String,
}

/// Everything known about one case.
#[derive(Clone, Debug)]
pub struct CaseData {
    pub name: String,
    pub file_stem: &'static str,
    pub config: ConfigTable,
    pub plan: ConstructionPlan,
    /// The reference involution.
    pub sigma: Permutation,
    /// `(i, j, σ(i), σ(j))`: the lines set to `x = 0`, `x = z`, `y = 0`, `y = z`.
    pub grid: [usize; 4],
    pub map: MapKind,
    pub expected_aut_order: usize,
    pub expected_constraint: Poly,
    /// True when the expected constraint was computed here rather than published.
    pub constraint_derived: bool,
    pub expected_root_product: Rational,
    pub expected_status: Status,
    pub cfg_source: &'static str,
    pub plan_source: &'static str,
    pub plus_source: &'static str,
    pub minus_source: &'static str,
}

fn load() -> Vec<CaseData> {
    let manifest: Manifest = toml::from_str(CASES_TOML).expect("embedded manifest parses");
    manifest
        .case
        .into_iter()
        .map(|e| {
            let files = FILES
                .iter()
                .find(|f| f.stem == e.file)
                .unwrap_or_else(|| panic!("no embedded files for {}", e.file));
            let config = parse_config_table(files.cfg).expect("embedded table parses");
            let plan = parse_plan(files.plan).expect("embedded plan parses");
            let sigma = Permutation::parse_cycles(&e.sigma, config.n()).expect("embedded sigma parses");
            let constraint = parse_ratfunc(&e.constraint, plan.var()).expect("embedded constraint parses");
            CaseData {
                name: e.name,
                file_stem: files.stem,
                sigma,
                grid: e.grid,
                map: e.map.parse().expect("embedded map kind parses"),
                expected_aut_order: e.aut_order,
                expected_constraint: constraint.num().clone(),
                constraint_derived: e.constraint_derived,
                expected_root_product: e.root_product.parse().expect("embedded root product parses"),
                expected_status: e.status.parse().expect("embedded status parses"),
                config,
                plan,
                cfg_source: files.cfg,
                plan_source: files.plan,
                plus_source: files.plus,
                minus_source: files.minus,
            }
        })
        .collect()
}

fn all() -> &'static [CaseData] {
    static CASES: OnceLock<Vec<CaseData>> = OnceLock::new();
    CASES.get_or_init(load)
}

/// Case names in listing order.
pub fn list_cases() -> Vec<&'static str> {
    all().iter().map(|c| c.name.as_str()).collect()
}

pub fn get_case(name: &str) -> Result<CaseData, CorpusError> {
    all()
        .iter()
        .find(|c| c.name == name)
        .cloned()
        .ok_or_else(|| CorpusError::UnknownCase(name.to_string()))
}

/// Writes every corpus file into `dir` (created if needed) and returns the paths written.
pub fn install_corpus(dir: &Path) -> Result<Vec<PathBuf>, CorpusError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CorpusError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    let mut written = Vec::new();
    let mut put = |name: String, body: &str| -> Result<(), CorpusError> {
        let path = dir.join(name);
        std::fs::write(&path, body).map_err(io(&path))?;
        written.push(path);
        Ok(())
    };
    put("cases.toml".into(), CASES_TOML)?;
    for f in FILES {
        put(format!("{}.cfg", f.stem), f.cfg)?;
        put(format!("{}.plan", f.stem), f.plan)?;
        put(format!("{}.plus.arr", f.stem), f.plus)?;
        put(format!("{}.minus.arr", f.stem), f.minus)?;
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_cases_in_order() {
        assert_eq!(
            list_cases(),
            vec![
                "{1}",
                "{6}",
                "{7}",
                "maclane",
                "nazir-yoshinaga",
                "11.B.3.b.2.iii",
                "11.B.3.b.2.iv",
                "11.B.2.iv",
                "falk-sturmfels"
            ]
        );
        assert!(get_case("rybnikov").is_err());
    }

    #[test]
    fn sizes_agree() {
        for name in list_cases() {
            let c = get_case(name).unwrap();
            assert_eq!(c.config.n(), c.plan.n(), "{}", name);
            assert_eq!(c.sigma.degree(), c.config.n(), "{}", name);
            assert_eq!(c.plan.grid(), c.grid, "{}", name);
            assert_eq!(c.grid[2], c.sigma.apply(c.grid[0] - 1) + 1, "{}", name);
            assert_eq!(c.grid[3], c.sigma.apply(c.grid[1] - 1) + 1, "{}", name);
        }
    }

    #[test]
    fn reference_values() {
        let six = get_case("{6}").unwrap();
        assert_eq!(six.expected_constraint, Poly::from_ints(&[-1, 1, 1]));
        let seven = get_case("{7}").unwrap();
        assert_eq!(seven.sigma.to_string(), "(1 5)(2 6)(3 4)(7 9)");
        let fs = get_case("falk-sturmfels").unwrap();
        assert_eq!(fs.expected_status, Status::Failure);
        assert!(fs.constraint_derived);
        assert!(get_case("maclane").unwrap().map.conjugate);
    }
}
