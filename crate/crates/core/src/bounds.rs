//! Degree bounds derived from `m0` and the comparison bounds they compete with.
//!
//! | bound       | value               | holds when                                   |
//! |-------------|---------------------|----------------------------------------------|
//! | tight       | `m0 + d`            | generic point / countably generic generators |
//! | frobenius   | `m0 + d + 1`        | generic generators, `R` normal               |
//! | ideal       | `m0 + d + 1 + a(R)` | generic generators, `R` Cohen-Macaulay, dim >= 2 |
//! | koszul      | sum of `d+1` largest degrees | any primary generators             |
//! | semistable  | `ceil(d Σa / (n-1))` | first syzygy bundle strongly semistable     |

use serde::Serialize;

use crate::error::{Error, Result};
use crate::froeberg::{smallest_zero, DegreeType};

/// The hypothesis under which a bound is known to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    /// Generic forms in the polynomial ring.
    GenericPolynomialRing,
    /// Generic point of the parameter space and countably generic choices.
    CountablyGeneric,
    GenericNormal,
    GenericCohenMacaulay,
    PrimaryOnly,
    StronglySemistable,
    /// `d = 1`, three equal odd degrees, strongly semistable syzygy bundle.
    StronglySemistableCurve,
}

impl Hypothesis {
    pub fn describe(self) -> &'static str {
        match self {
            Hypothesis::GenericPolynomialRing => "generic forms in the polynomial ring (Fröberg prediction)",
            Hypothesis::CountablyGeneric => "generic point / countably generic generators, any standard-graded R",
            Hypothesis::GenericNormal => "generic generators, R normal",
            Hypothesis::GenericCohenMacaulay => "generic generators, R Cohen-Macaulay of dimension >= 2",
            Hypothesis::PrimaryOnly => "any generators of an R+-primary ideal",
            Hypothesis::StronglySemistable => "Syz_1 strongly semistable",
            Hypothesis::StronglySemistableCurve => "d = 1, degrees (a,a,a) with a odd, Syz strongly semistable",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundFamily {
    Inclusion,
    Tight,
    Frobenius,
    Ideal,
    Koszul,
    Semistable,
    SemistableFrobenius,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundNote {
    pub family: BoundFamily,
    pub hypothesis: Hypothesis,
    pub closure: &'static str,
    pub condition: &'static str,
}

/// `R_{m0 + d} ⊆ I*`.
pub fn generic_tight_bound(dt: &DegreeType) -> Result<u64> {
    Ok(smallest_zero(dt)? + dt.d() as u64)
}

/// `R_{m0 + d + 1} ⊆ I^F`.
pub fn generic_frobenius_bound(dt: &DegreeType) -> Result<u64> {
    Ok(smallest_zero(dt)? + dt.d() as u64 + 1)
}

/// `R_{m0 + d + 1 + a} ⊆ I` for Cohen-Macaulay `R` with a-invariant `a`.
pub fn generic_ideal_bound(dt: &DegreeType, a_invariant: i64) -> Result<i64> {
    Ok(smallest_zero(dt)? as i64 + dt.d() as i64 + 1 + a_invariant)
}

/// Sum of the `d + 1` largest degrees.
pub fn koszul_bound(dt: &DegreeType) -> Result<u64> {
    dt.require_inclusion_bound()?;
    Ok(dt.degrees()[..=dt.d() as usize].iter().map(|&a| a as u64).sum())
}

/// `ceil(d Σa / (n - 1))`.
pub fn semistable_bound(dt: &DegreeType) -> Result<u64> {
    if dt.n() < 2 {
        return Err(Error::Shape(format!("semistable bound needs n >= 2, got {dt}")));
    }
    Ok((dt.d() as u64 * dt.total_degree()).div_ceil(dt.n() as u64 - 1))
}

/// `(3a + 1) / 2` for `d = 1` and degrees `(a, a, a)` with `a` odd.
pub fn semistable_frobenius_improvement(dt: &DegreeType) -> Result<u64> {
    match (dt.d(), dt.n(), dt.constant_degree()) {
        (1, 3, Some(a)) if a % 2 == 1 => Ok((3 * a as u64).div_ceil(2)),
        _ => Err(Error::Shape(format!("needs d = 1 and three equal odd degrees, got {dt}"))),
    }
}

/// a-invariant of `k[x_1..x_v] / (h_1..h_c)` for a graded complete
/// intersection: `Σ deg h_j - v`.
pub fn complete_intersection_a_invariant(relation_degrees: &[u32], variables: u32) -> i64 {
    relation_degrees.iter().map(|&e| e as i64).sum::<i64>() - variables as i64
}

/// Every bound family for one degree type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub degree_type: DegreeType,
    pub m0: u64,
    pub tight: u64,
    pub frobenius: u64,
    pub a_invariant: Option<i64>,
    pub ideal_cm: Option<i64>,
    pub koszul: u64,
    pub semistable: u64,
    pub semistable_frobenius: Option<u64>,
    pub notes: Vec<BoundNote>,
}

impl BoundReport {
    pub fn compute(dt: &DegreeType, a_invariant: Option<i64>) -> Result<Self> {
        let m0 = smallest_zero(dt)?;
        let d = dt.d() as u64;
        let semistable_frobenius = semistable_frobenius_improvement(dt).ok();
        let mut notes = vec![
            BoundNote {
                family: BoundFamily::Inclusion,
                hypothesis: Hypothesis::GenericPolynomialRing,
                closure: "P_m ⊆ I",
                condition: Hypothesis::GenericPolynomialRing.describe(),
            },
            BoundNote {
                family: BoundFamily::Tight,
                hypothesis: Hypothesis::CountablyGeneric,
                closure: "R_m ⊆ I*",
                condition: Hypothesis::CountablyGeneric.describe(),
            },
            BoundNote {
                family: BoundFamily::Frobenius,
                hypothesis: Hypothesis::GenericNormal,
                closure: "R_m ⊆ I^F",
                condition: Hypothesis::GenericNormal.describe(),
            },
        ];
        if a_invariant.is_some() {
            notes.push(BoundNote {
                family: BoundFamily::Ideal,
                hypothesis: Hypothesis::GenericCohenMacaulay,
                closure: "R_m ⊆ I",
                condition: Hypothesis::GenericCohenMacaulay.describe(),
            });
        }
        notes.push(BoundNote {
            family: BoundFamily::Koszul,
            hypothesis: Hypothesis::PrimaryOnly,
            closure: "R_m ⊆ I*",
            condition: Hypothesis::PrimaryOnly.describe(),
        });
        notes.push(BoundNote {
            family: BoundFamily::Semistable,
            hypothesis: Hypothesis::StronglySemistable,
            closure: "R_m ⊆ I*",
            condition: Hypothesis::StronglySemistable.describe(),
        });
        if semistable_frobenius.is_some() {
            notes.push(BoundNote {
                family: BoundFamily::SemistableFrobenius,
                hypothesis: Hypothesis::StronglySemistableCurve,
                closure: "R_m ⊆ I^F",
                condition: Hypothesis::StronglySemistableCurve.describe(),
            });
        }
        Ok(Self {
            degree_type: dt.clone(),
            m0,
            tight: m0 + d,
            frobenius: m0 + d + 1,
            a_invariant,
            ideal_cm: a_invariant.map(|a| m0 as i64 + d as i64 + 1 + a),
            koszul: koszul_bound(dt)?,
            semistable: semistable_bound(dt)?,
            semistable_frobenius,
            notes,
        })
    }
}

/// Limits of each row as `n -> oo` with `d` and `a` fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundLimits {
    /// `(d + 1) a`; independent of `n`.
    pub koszul: u64,
    /// `d a n / (n - 1)` decreases to `d a` from above, so the ceiling settles at `d a + 1`.
    pub semistable: u64,
    /// Once `n` reaches the number of degree-`a` monomials, `m0 = a`.
    pub generic: u64,
}

/// Tight-closure bound comparison for constant degree `a` over several `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub d: u32,
    pub a: u32,
    pub n_values: Vec<usize>,
    pub koszul: Vec<u64>,
    pub semistable: Vec<u64>,
    pub generic: Vec<u64>,
    pub limit: BoundLimits,
}

pub fn build_table(d: u32, a: u32, n_values: &[usize]) -> Result<BoundTable> {
    let mut table = BoundTable {
        d,
        a,
        n_values: n_values.to_vec(),
        koszul: Vec::with_capacity(n_values.len()),
        semistable: Vec::with_capacity(n_values.len()),
        generic: Vec::with_capacity(n_values.len()),
        limit: BoundLimits {
            koszul: (d as u64 + 1) * a as u64,
            semistable: d as u64 * a as u64 + 1,
            generic: a as u64 + d as u64,
        },
    };
    for &n in n_values {
        let dt = DegreeType::constant(d, n, a)?;
        table.koszul.push(koszul_bound(&dt)?);
        table.semistable.push(semistable_bound(&dt)?);
        table.generic.push(generic_tight_bound(&dt)?);
    }
    Ok(table)
}

/// Reads `n` values written like `3..8,10,11`; ranges are inclusive.
pub fn parse_n_values(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("cannot read n values from {text:?}"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let lo: usize = lo.trim().parse().map_err(|_| bad())?;
                let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
                if lo > hi {
                    return Err(bad());
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

/// `m0(a) / a` for a range of degrees, with the predicted large-`a` slope.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub d: u32,
    pub n: usize,
    pub points: Vec<AsymptoticPoint>,
    pub predicted_slope: Option<f64>,
    pub prediction: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticPoint {
    pub a: u32,
    pub m0: u64,
    /// `m0 / a`.
    pub ratio: f64,
}

fn exact_root(n: usize, k: u32) -> Option<u64> {
    let r = (n as f64).powf(1.0 / k as f64).round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&c| c.checked_pow(k) == Some(n as u64))
}

/// Predicted `lim m0(a) / a` where a formula or an observed pattern exists.
pub fn predicted_slope(d: u32, n: usize) -> Option<(f64, String)> {
    let nf = n as f64;
    match d {
        1 if n >= 2 => Some((nf / (nf - 1.0), "n/(n-1)".into())),
        2 if n >= 4 => Some(((nf + nf.sqrt()) / (nf - 1.0), "(n+sqrt(n))/(n-1)".into())),
        3 | 4 => {
            let l = exact_root(n, d)?;
            (l >= 2).then(|| (l as f64 / (l as f64 - 1.0), format!("l/(l-1) with n = {l}^{d}")))
        }
        _ => None,
    }
}

pub fn asymptotic_ratio(d: u32, n: usize, a_values: &[u32]) -> Result<AsymptoticReport> {
    let points = a_values
        .iter()
        .map(|&a| {
            let m0 = smallest_zero(&DegreeType::constant(d, n, a)?)?;
            Ok(AsymptoticPoint {
                a,
                m0,
                ratio: m0 as f64 / a as f64,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (predicted_slope, prediction) = match predicted_slope(d, n) {
        Some((s, p)) => (Some(s), Some(p)),
        None => (None, None),
    };
    Ok(AsymptoticReport {
        d,
        n,
        points,
        predicted_slope,
        prediction,
    })
}
