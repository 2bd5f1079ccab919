use serde::Serialize;

use super::render::Table;
use crate::error::Result;
use crate::gram::{self, GramReport};
use crate::griess::{GriessAlgebra, GriessElement};
use crate::lattice::{verify_relations, RelationReport, VirasoroFamily, WeightCap};
use crate::linalg::{self, Matrix};
use crate::minimal_model::{self, kac_table, ModuleClass};
use crate::par;
use crate::scalar::{self, int, Scalar};

fn ser_scalar<S: serde::Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&scalar::format(x))
}

#[derive(Debug, Serialize)]
pub struct KacRow {
    pub class: String,
    pub r: u32,
    pub s: u32,
    #[serde(serialize_with = "ser_scalar")]
    pub weight: Scalar,
}

#[derive(Debug, Serialize)]
pub struct KacReport {
    pub m: u32,
    #[serde(serialize_with = "ser_scalar")]
    pub central_charge: Scalar,
    pub classes: Vec<KacRow>,
}

impl KacReport {
    pub fn compute(m: u32) -> Result<Self> {
        let classes = kac_table(m)?
            .into_iter()
            .map(|(c, weight)| {
                let l = c.canonical();
                KacRow {
                    class: c.to_string(),
                    r: l.r(),
                    s: l.s(),
                    weight,
                }
            })
            .collect();
        Ok(KacReport {
            m,
            central_charge: minimal_model::central_charge(m)?,
            classes,
        })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(vec!["class", "r", "s", "weight"]);
        for r in &self.classes {
            t.push(vec![
                r.class.as_str().into(),
                r.r.into(),
                r.s.into(),
                (&r.weight).into(),
            ]);
        }
        t
    }
}

#[derive(Debug, Serialize)]
pub struct FusionRow {
    pub a: String,
    pub b: String,
    pub c: String,
}

/// Every `(a, b, c)` with `N_{a b}^c = 1`.
#[derive(Debug, Serialize)]
pub struct FusionReport {
    pub m: u32,
    pub rules: Vec<FusionRow>,
}

impl FusionReport {
    pub fn compute(m: u32) -> Result<Self> {
        let classes: Vec<ModuleClass> = kac_table(m)?.into_iter().map(|(c, _)| c).collect();
        let mut rules = Vec::new();
        for &a in &classes {
            for &b in &classes {
                for c in minimal_model::fusion_product(a, b)? {
                    rules.push(FusionRow {
                        a: a.to_string(),
                        b: b.to_string(),
                        c: c.to_string(),
                    });
                }
            }
        }
        Ok(FusionReport { m, rules })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(vec!["a", "b", "c"]);
        for r in &self.rules {
            t.push(vec![
                r.a.as_str().into(),
                r.b.as_str().into(),
                r.c.as_str().into(),
            ]);
        }
        t
    }
}

#[derive(Debug, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct ProductRow {
    pub left: String,
    pub right: String,
    pub product: GriessElement,
}

#[derive(Debug, Serialize)]
pub struct GriessReport {
    pub n: usize,
    pub m: u32,
    #[serde(serialize_with = "ser_scalar")]
    pub alpha: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub beta: Scalar,
    pub dim: usize,
    pub products: Vec<ProductRow>,
    #[serde(serialize_with = "gram::ser_matrix")]
    pub gram: Matrix,
    pub checks: Vec<CheckRow>,
    pub pass: bool,
}

impl GriessReport {
    pub fn compute(n: usize, m: u32) -> Result<Self> {
        let alg = GriessAlgebra::build(n, m)?;
        let pairs = alg.pairs().to_vec();
        let mut products = Vec::new();
        for (a, p) in pairs.iter().enumerate() {
            for q in &pairs[a..] {
                let product = alg.product(&alg.basis(p), &alg.basis(q))?;
                if !product.is_zero() {
                    products.push(ProductRow {
                        left: p.to_string(),
                        right: q.to_string(),
                        product,
                    });
                }
            }
        }
        let checks: Vec<CheckRow> = alg
            .verify()
            .into_iter()
            .map(|(c, pass)| CheckRow {
                check: c.to_string(),
                pass,
            })
            .collect();
        Ok(GriessReport {
            n,
            m,
            alpha: alg.alpha().clone(),
            beta: alg.beta().clone(),
            dim: alg.dim(),
            products,
            gram: alg.gram_matrix().clone(),
            pass: checks.iter().all(|c| c.pass),
            checks,
        })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(vec!["check", "pass"]);
        for c in &self.checks {
            t.push(vec![c.check.as_str().into(), c.pass.into()]);
        }
        t
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumRow {
    pub pair: String,
    #[serde(serialize_with = "ser_scalar")]
    pub eigenvalue: Scalar,
    pub multiplicity: usize,
    pub expected: usize,
}

#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub m: u32,
    pub rows: Vec<SpectrumRow>,
    pub pass: bool,
}

impl SpectrumReport {
    pub fn compute(n: usize, m: u32) -> Result<Self> {
        let alg = GriessAlgebra::build(n, m)?;
        let expected = alg.expected_multiplicities();
        let per_pair = par::map(alg.pairs(), |p| {
            let ad = alg.ad_matrix(p);
            [int(2), alg.alpha().clone(), int(0)]
                .into_iter()
                .zip(&expected)
                .map(|(lambda, &e)| SpectrumRow {
                    pair: p.to_string(),
                    multiplicity: linalg::nullity(&ad.matrix().shift(&lambda)),
                    eigenvalue: lambda,
                    expected: e,
                })
                .collect::<Vec<_>>()
        });
        let rows: Vec<SpectrumRow> = per_pair.into_iter().flatten().collect();
        let pass = rows.iter().all(|r| r.multiplicity == r.expected);
        Ok(SpectrumReport { n, m, rows, pass })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(vec!["pair", "eigenvalue", "multiplicity", "expected"]);
        for r in &self.rows {
            t.push(vec![
                r.pair.as_str().into(),
                (&r.eigenvalue).into(),
                r.multiplicity.into(),
                r.expected.into(),
            ]);
        }
        t
    }
}

#[derive(Debug, Serialize)]
pub struct AutosReport {
    pub group_order: u64,
    pub expected: u64,
    pub pass: bool,
}

impl AutosReport {
    pub fn compute(n: usize, m: u32) -> Result<Self> {
        let alg = GriessAlgebra::build(n, m)?;
        let group_order = alg.generated_group_order(alg.pairs())?;
        let expected = (1..=n as u64).product();
        let involutions_ok = alg.pairs().iter().all(|p| {
            let s = alg.miyamoto(p);
            alg.is_automorphism(&s) && s.compose(&s).map(|x| x.is_identity()).unwrap_or(false)
        });
        let pass = group_order == expected && involutions_ok && alg.check_miyamoto_relations();
        Ok(AutosReport {
            group_order,
            expected,
            pass,
        })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(vec!["group_order", "expected", "pass"]);
        t.push(vec![
            self.group_order.into(),
            self.expected.into(),
            self.pass.into(),
        ]);
        t
    }
}

#[derive(Debug, Serialize)]
pub struct ClassRow {
    pub m: u32,
    pub positive_definite: bool,
    pub within_hypothesis: bool,
}

#[derive(Debug, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub rows: Vec<ClassRow>,
}

impl ClassificationReport {
    pub fn compute(n: usize, m_max: u32) -> Result<Self> {
        let rows = gram::classify(n, m_max)?
            .into_iter()
            .map(|(m, positive_definite)| ClassRow {
                m,
                positive_definite,
                within_hypothesis: m >= 2,
            })
            .collect();
        Ok(ClassificationReport { n, rows })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(vec!["n", "m", "positive_definite", "within_hypothesis"]);
        for r in &self.rows {
            t.push(vec![
                self.n.into(),
                r.m.into(),
                r.positive_definite.into(),
                r.within_hypothesis.into(),
            ]);
        }
        t
    }
}

fn gram_table(r: &GramReport) -> Table {
    let mut t = Table::new(vec![
        "s",
        "detB_closed",
        "detB_direct",
        "detC_closed",
        "detC_direct",
    ]);
    for (k, s) in (3..=r.n).enumerate() {
        t.push(vec![
            s.into(),
            (&r.detb_closed[k]).into(),
            (&r.detb_direct[k]).into(),
            (&r.detc_closed[k]).into(),
            (&r.detc_direct[k]).into(),
        ]);
    }
    t
}

#[derive(Debug, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub m: u32,
    pub positive_definite: bool,
    pub block_verdict: bool,
    pub determinants_agree: bool,
    pub griess_checks_pass: bool,
}

#[derive(Debug, Serialize)]
pub struct ScanReport {
    pub n_max: usize,
    pub m_max: u32,
    pub rows: Vec<ScanRow>,
    pub pass: bool,
}

impl ScanReport {
    pub fn compute(n_max: usize, m_max: u32) -> Result<Self> {
        let grid: Vec<(usize, u32)> = (3..=n_max)
            .flat_map(|n| (1..=m_max).map(move |m| (n, m)))
            .collect();
        let rows = par::try_map(&grid, |&(n, m)| -> Result<ScanRow> {
            let report = GramReport::compute(n, m)?;
            let alg = GriessAlgebra::build(n, m)?;
            Ok(ScanRow {
                n,
                m,
                positive_definite: report.positive_definite,
                block_verdict: report.block_verdict,
                determinants_agree: report.determinants_agree(),
                griess_checks_pass: alg.verify().iter().all(|(_, ok)| *ok),
            })
        })?;
        let pass = rows
            .iter()
            .all(|r| r.determinants_agree && r.griess_checks_pass);
        Ok(ScanReport {
            n_max,
            m_max,
            rows,
            pass,
        })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(vec![
            "n",
            "m",
            "positive_definite",
            "block_verdict",
            "determinants_agree",
            "griess_checks_pass",
        ]);
        for r in &self.rows {
            t.push(vec![
                r.n.into(),
                r.m.into(),
                r.positive_definite.into(),
                r.block_verdict.into(),
                r.determinants_agree.into(),
                r.griess_checks_pass.into(),
            ]);
        }
        t
    }
}

pub fn lattice_report(n: usize, m: u32, cap: WeightCap) -> Result<RelationReport> {
    let family = match m {
        1 => VirasoroFamily::ising(n)?,
        2 if n == 3 => VirasoroFamily::tilde()?,
        _ => {
            return Err(crate::Error::InvalidParameter(format!(
                "lattice-verify supports m = 1 (any n) or m = 2 with n = 3, got n = {n}, m = {m}"
            )))
        }
    };
    verify_relations(&family, cap)
}

fn relation_table(r: &RelationReport) -> Table {
    let mut t = Table::new(vec!["relation", "u", "v", "mode", "pass"]);
    for c in &r.checks {
        t.push(vec![
            c.relation.as_str().into(),
            c.u.as_str().into(),
            c.v.as_str().into(),
            c.mode.into(),
            c.pass.into(),
        ]);
    }
    t.push(vec![
        "structure_constants".into(),
        "".into(),
        "".into(),
        "".into(),
        r.structure_constants_match.into(),
    ]);
    t
}

/// The result of one subcommand.
#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Kac(KacReport),
    Fusion(FusionReport),
    Griess(GriessReport),
    Spectrum(SpectrumReport),
    Autos(AutosReport),
    Classification(ClassificationReport),
    Gram(GramReport),
    Scan(ScanReport),
    Lattice(RelationReport),
}

impl Report {
    pub fn passed(&self) -> bool {
        match self {
            Report::Kac(_) | Report::Fusion(_) | Report::Classification(_) => true,
            Report::Griess(r) => r.pass,
            Report::Spectrum(r) => r.pass,
            Report::Autos(r) => r.pass,
            Report::Gram(r) => r.determinants_agree(),
            Report::Scan(r) => r.pass,
            Report::Lattice(r) => r.all_pass,
        }
    }

    /// Human-readable descriptions of failing instances.
    pub fn failures(&self) -> Vec<String> {
        match self {
            Report::Griess(r) => r
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.check.clone())
                .collect(),
            Report::Spectrum(r) => r
                .rows
                .iter()
                .filter(|x| x.multiplicity != x.expected)
                .map(|x| {
                    format!(
                        "pair {} eigenvalue {}",
                        x.pair,
                        scalar::format(&x.eigenvalue)
                    )
                })
                .collect(),
            Report::Autos(r) if !r.pass => {
                vec![format!("group order {} != {}", r.group_order, r.expected)]
            }
            Report::Gram(r) if !r.determinants_agree() => vec!["closed-form determinants".into()],
            Report::Scan(r) => r
                .rows
                .iter()
                .filter(|x| !(x.determinants_agree && x.griess_checks_pass))
                .map(|x| format!("n={} m={}", x.n, x.m))
                .collect(),
            Report::Lattice(r) => {
                let mut v: Vec<String> = r
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| format!("{} w[{}]_{} ({})", c.relation, c.u, c.mode, c.v))
                    .collect();
                if !r.structure_constants_match {
                    v.push("structure constants".into());
                }
                v
            }
            _ => Vec::new(),
        }
    }

    pub fn table(&self) -> Table {
        match self {
            Report::Kac(r) => r.table(),
            Report::Fusion(r) => r.table(),
            Report::Griess(r) => r.table(),
            Report::Spectrum(r) => r.table(),
            Report::Autos(r) => r.table(),
            Report::Classification(r) => r.table(),
            Report::Gram(r) => gram_table(r),
            Report::Scan(r) => r.table(),
            Report::Lattice(r) => relation_table(r),
        }
    }
}
