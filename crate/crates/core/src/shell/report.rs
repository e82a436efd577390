//! Report assembly and serialization. Exact quantities are written as
//! `"p/q"` strings; no timestamps or host data enter a report, so equal
//! inputs give byte-identical output.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::{int, to_ratio_string, Rational};
use crate::highrank::{bundle, ZetaBundle};
use crate::invariants::{
    alpha_large, beta_relation_check, beta_total, beta_zagier, counting_miracle_sides,
};
use crate::ranklow::predicates::{sample_sigmas, Side};
use crate::ranklow::{
    half_plane_check, lemma48_condition, rank3_parts, ratio_predicate_44, ratio_predicate_47,
    rh_third_line, DiscConditionReport, HalfPlaneReport, PredicateReport,
};
use crate::rhcheck::{
    beta_bounds_for, beta_prime_bounds_for, rh_verdict, rough_bounds_for, BoundReport, RhVerdict,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Settings {
    pub precision_bits: usize,
    pub tolerance: f64,
    pub samples: usize,
    pub seed: u64,
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(to_ratio_string).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArtinReport {
    pub curve: String,
    pub q: u64,
    pub g: usize,
    pub p_coefficients: Vec<String>,
    /// `N_1, …, N_{2g}`
    pub point_counts: Vec<String>,
    pub class_number: String,
    pub artin_zeta: String,
    /// `ζ̂(1), ζ̂(2), ζ̂(3)`
    pub zeta_values: Vec<String>,
}

pub fn artin_report(c: &Curve) -> ArtinReport {
    let sv = c.special_values(3);
    ArtinReport {
        curve: c.name().to_string(),
        q: c.q(),
        g: c.genus(),
        p_coefficients: strs(c.p().coeffs()),
        point_counts: strs(&c.point_counts(2 * c.genus())),
        class_number: to_ratio_string(&c.class_number()),
        artin_zeta: c.artin_zeta().to_string(),
        zeta_values: (1..=3).map(|k| to_ratio_string(sv.zeta(k))).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaReport {
    pub curve: String,
    pub rank: usize,
    pub big_q: String,
    pub zeta: String,
    /// Coefficients of `P_{X,n}(T)`, constant term first.
    pub numerator: Vec<String>,
    /// `α(mn)` for `m = 0..g−1`.
    pub alpha: Vec<String>,
    pub beta: String,
    pub normalization: String,
}

pub fn zeta_report(c: &Curve, b: &ZetaBundle) -> ZetaReport {
    ZetaReport {
        curve: c.name().to_string(),
        rank: b.n,
        big_q: to_ratio_string(&b.big_q),
        zeta: b.zhat.to_string(),
        numerator: strs(b.numerator.coeffs()),
        alpha: strs(&b.alpha),
        beta: to_ratio_string(&b.beta0),
        normalization: to_ratio_string(&b.normalization),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MiracleEntry {
    pub curve: String,
    /// Checks `α_{n+1}(0) = q^{n(g−1)} β_n(0)`.
    pub n: usize,
    /// Both sides after dividing by their natural powers of `q`.
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

pub fn miracle_entry(c: &Curve, n: usize) -> Result<MiracleEntry> {
    let (lhs, rhs) = counting_miracle_sides(c, n + 1)?;
    Ok(MiracleEntry {
        curve: c.name().to_string(),
        n,
        lhs: to_ratio_string(&lhs),
        rhs: to_ratio_string(&rhs),
        holds: lhs == rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantsReport {
    pub curve: String,
    pub rank: usize,
    pub alpha: Vec<String>,
    pub beta_residue: String,
    pub beta_zagier: String,
    /// `P_{X,n}(1)/(Q − 1)`
    pub beta_from_numerator: String,
    pub beta_routes_agree: bool,
    pub beta_total: String,
    /// `β(mn) = β(0)` for small `m`, and agreement with the residue.
    pub beta_relation: bool,
    /// `α(mn)` for `m = g, …, 2g` (beyond the numerator's range).
    pub alpha_large: Vec<String>,
}

pub fn invariants_report(c: &Curve, b: &ZetaBundle) -> Result<InvariantsReport> {
    let n = b.n;
    let zag = beta_zagier(c, n, 0)?;
    let via_p = b.numerator.eval(&int(1)) / (&b.big_q - int(1));
    let g = c.genus() as i64;
    let large = (g..=2 * g)
        .map(|m| alpha_large(c, n, m).map(|v| to_ratio_string(&v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantsReport {
        curve: c.name().to_string(),
        rank: n,
        alpha: strs(&b.alpha),
        beta_residue: to_ratio_string(&b.beta0),
        beta_zagier: to_ratio_string(&zag),
        beta_from_numerator: to_ratio_string(&via_p),
        beta_routes_agree: zag == b.beta0 && via_p == b.beta0,
        beta_total: to_ratio_string(&beta_total(c, n)),
        beta_relation: beta_relation_check(c, n)?,
        alpha_large: large,
    })
}

pub fn bound_reports(c: &Curve, b: &ZetaBundle) -> Vec<BoundReport> {
    vec![
        rough_bounds_for(c, b),
        beta_prime_bounds_for(c, b),
        beta_bounds_for(c, b),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Rank3Report {
    pub curve: String,
    /// Constant relating the three-part sum to the rank-3 zeta.
    pub constant: String,
    pub z1: String,
    pub z2: String,
    pub z3: String,
    pub z_ge2: String,
    pub z_le2: String,
    /// Numerator roots of `z_ge2` against `|T| = 1/q`.
    pub third_line: RhVerdict,
    pub half_plane: HalfPlaneReport,
    pub full_rh: RhVerdict,
    pub disc_condition: DiscConditionReport,
    pub predicates: Vec<PredicateReport>,
}

pub fn predicate_reports(c: &Curve, n: usize, s: &Settings) -> Result<Vec<PredicateReport>> {
    let mut out = Vec::new();
    for a in 1..=n {
        let sides = |thr: f64| {
            let mut v = sample_sigmas(c.name(), s.seed, n, c.q(), thr, Side::Below, s.samples);
            v.extend(sample_sigmas(
                c.name(),
                s.seed,
                n,
                c.q(),
                thr,
                Side::Above,
                s.samples,
            ));
            v
        };
        out.push(ratio_predicate_44(c, n, a, &sides(0.0), s.precision_bits)?);
        out.push(ratio_predicate_47(
            c,
            n,
            a,
            &sides(n as f64 / 2.0 - a as f64),
            s.precision_bits,
        )?);
    }
    Ok(out)
}

pub fn rank3_report(c: &Curve, s: &Settings) -> Result<Rank3Report> {
    let parts = rank3_parts(c)?;
    let third_line = rh_third_line(&parts, s.tolerance, s.precision_bits)?;
    let (half_plane, full_rh) = half_plane_check(c, s.tolerance, s.precision_bits)?;
    Ok(Rank3Report {
        curve: c.name().to_string(),
        constant: to_ratio_string(&parts.constant),
        z1: parts.z1.to_string(),
        z2: parts.z2.to_string(),
        z3: parts.z3.to_string(),
        z_ge2: parts.z_ge2.to_string(),
        z_le2: parts.z_le2.to_string(),
        third_line,
        half_plane,
        full_rh,
        disc_condition: lemma48_condition(c),
        predicates: predicate_reports(c, 3, s)?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankReport {
    pub zeta: ZetaReport,
    pub invariants: InvariantsReport,
    pub rh: RhVerdict,
    pub bounds: Vec<BoundReport>,
}

pub fn rank_report(c: &Curve, n: usize, s: &Settings) -> Result<RankReport> {
    let b = bundle(c, n)?;
    Ok(RankReport {
        zeta: zeta_report(c, &b),
        invariants: invariants_report(c, &b)?,
        rh: rh_verdict(&b, s.tolerance, s.precision_bits)?,
        bounds: bound_reports(c, &b),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveReport {
    pub artin: ArtinReport,
    pub ranks: Vec<RankReport>,
    pub miracle: Vec<MiracleEntry>,
    pub rank3: Rank3Report,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub settings: Settings,
    pub ranks: Vec<usize>,
    pub curves: Vec<CurveReport>,
}

pub fn curve_report(c: &Curve, ranks: &[usize], s: &Settings) -> Result<CurveReport> {
    let max = ranks.iter().copied().max().unwrap_or(1);
    Ok(CurveReport {
        artin: artin_report(c),
        ranks: ranks
            .iter()
            .map(|&n| rank_report(c, n, s))
            .collect::<Result<_>>()?,
        miracle: (1..=max)
            .map(|n| miracle_entry(c, n))
            .collect::<Result<_>>()?,
        rank3: rank3_report(c, s)?,
    })
}

/// Full report; curves are processed in parallel and kept in input order.
pub fn full_report(curves: &[Curve], ranks: &[usize], s: &Settings) -> Result<Report> {
    let reports = curves
        .par_iter()
        .map(|c| curve_report(c, ranks, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        settings: s.clone(),
        ranks: ranks.to_vec(),
        curves: reports,
    })
}

/// Exact identities that failed; any entry makes the run exit nonzero.
pub trait ExactIdentities {
    fn failures(&self) -> Vec<String>;
}

impl ExactIdentities for MiracleEntry {
    fn failures(&self) -> Vec<String> {
        if self.holds {
            vec![]
        } else {
            vec![format!(
                "{}: counting miracle fails at n = {}",
                self.curve, self.n
            )]
        }
    }
}

impl ExactIdentities for InvariantsReport {
    fn failures(&self) -> Vec<String> {
        let mut v = Vec::new();
        if !self.beta_routes_agree {
            v.push(format!(
                "{} rank {}: beta routes disagree",
                self.curve, self.rank
            ));
        }
        if !self.beta_relation {
            v.push(format!(
                "{} rank {}: beta relation fails",
                self.curve, self.rank
            ));
        }
        v
    }
}

impl<T: ExactIdentities> ExactIdentities for [T] {
    fn failures(&self) -> Vec<String> {
        self.iter().flat_map(|x| x.failures()).collect()
    }
}

impl ExactIdentities for Report {
    fn failures(&self) -> Vec<String> {
        let mut v = Vec::new();
        for c in &self.curves {
            for r in &c.ranks {
                v.extend(r.invariants.failures());
            }
            v.extend(c.miracle.failures());
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScatterRow {
    pub curve: String,
    pub rank: usize,
    pub kind: String,
    pub root_re: f64,
    pub root_im: f64,
    pub modulus: f64,
    pub re_s: f64,
}

/// One row per reciprocal root of a verdict.
pub fn scatter_rows(curve: &str, rank: usize, kind: &str, v: &RhVerdict) -> Vec<ScatterRow> {
    v.root_pairs_f64()
        .into_iter()
        .zip(v.moduli.iter().zip(&v.s_lines))
        .map(|(z, (&m, &s))| ScatterRow {
            curve: curve.to_string(),
            rank,
            kind: kind.to_string(),
            root_re: z.re,
            root_im: z.im,
            modulus: m,
            re_s: s,
        })
        .collect()
}

pub fn report_scatter(r: &Report) -> Vec<ScatterRow> {
    let mut rows = Vec::new();
    for c in &r.curves {
        for rr in &c.ranks {
            rows.extend(scatter_rows(&c.artin.curve, rr.zeta.rank, "rh", &rr.rh));
        }
        rows.extend(scatter_rows(
            &c.artin.curve,
            3,
            "third_line",
            &c.rank3.third_line,
        ));
    }
    rows
}

pub fn write_csv<W: Write>(rows: &[ScatterRow], w: W) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    if rows.is_empty() {
        wr.write_record([
            "curve", "rank", "kind", "root_re", "root_im", "modulus", "re_s",
        ])
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    for r in rows {
        wr.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    wr.flush()?;
    Ok(())
}

pub fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_ratio;

    fn e0() -> Curve {
        Curve::from_point_counts("E0", 2, 1, &[3]).unwrap()
    }

    fn settings() -> Settings {
        Settings {
            precision_bits: 128,
            tolerance: 1e-9,
            samples: 20,
            seed: 0,
        }
    }

    #[test]
    fn zeta_report_e0_rank2() {
        let b = bundle(&e0(), 2).unwrap();
        let r = zeta_report(&e0(), &b);
        assert_eq!(r.numerator, vec!["3", "3", "12"]);
        assert_eq!(r.alpha, vec!["3"]);
        assert_eq!(r.beta, "6");
    }

    #[test]
    fn invariants_e0_have_no_failures() {
        for n in 1..=3 {
            let b = bundle(&e0(), n).unwrap();
            let r = invariants_report(&e0(), &b).unwrap();
            assert!(r.failures().is_empty(), "{:?}", r.failures());
        }
    }

    #[test]
    fn miracle_entries_e0() {
        let v: Vec<_> = (1..=4).map(|n| miracle_entry(&e0(), n).unwrap()).collect();
        assert!(v.iter().all(|m| m.holds));
    }

    #[test]
    fn exact_values_round_trip_through_json() {
        let b = bundle(&e0(), 3).unwrap();
        let text = to_json(&zeta_report(&e0(), &b)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parse_ratio(v["beta"].as_str().unwrap()).unwrap(), b.beta0);
        let num: Vec<Rational> = v["numerator"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| parse_ratio(x.as_str().unwrap()).unwrap())
            .collect();
        assert_eq!(num.as_slice(), b.numerator.coeffs());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let r = rank_report(&e0(), 2, &settings()).unwrap();
        let rows = scatter_rows("E0", 2, "rh", &r.rh);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("curve,rank,kind,root_re,root_im,modulus,re_s")
        );
        assert_eq!(lines.count(), 2);
    }
}
