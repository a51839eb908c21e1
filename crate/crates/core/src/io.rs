//! JSON formats. Every scalar is written as a string ("3", "-1/2"), so no
//! value ever passes through floating point.
//!
//! Configuration:
//!
//! ```json
//! {"n": 3, "k": 2, "field": "rational",
//!  "subspaces": [[["1","0","0","0"], ["0","1","0","0"]], ...]}
//! ```
//!
//! `field` is either `"rational"` or `{"prime": p}`. Each subspace is given
//! by spanning rows; they are reduced to canonical form on input.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{format_rational, parse_rational, Field, FieldError, PrimeField, Rationals};
use crate::nefcone::{CertReport, FailedCheck, Infeasibility};
use crate::projective::{ProjectiveError, Subspace};
use crate::special_position::{Certificate, Configuration, SpecialPositionError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error(transparent)]
    Configuration(#[from] SpecialPositionError),
    #[error("invalid document: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    n: usize,
    k: usize,
    field: FieldSpec,
    subspaces: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SubspaceDoc {
    pub ambient_n: usize,
    pub rows: Vec<Vec<String>>,
}

/// A configuration over whichever field its document declares.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyConfiguration {
    Rational(Configuration<Rationals>),
    Prime(Configuration<PrimeField>),
}

fn rows_of<F: Field>(s: &Subspace<F>) -> Vec<Vec<String>> {
    let f = s.field();
    s.basis().row_iter().map(|r| r.iter().map(|x| f.format(x)).collect()).collect()
}

pub fn subspace_doc<F: Field>(s: &Subspace<F>) -> SubspaceDoc {
    SubspaceDoc {
        ambient_n: s.ambient_n(),
        rows: rows_of(s),
    }
}

pub fn subspace_from_doc<F: Field>(field: &F, doc: &SubspaceDoc) -> Result<Subspace<F>, IoError> {
    parse_subspace(field, doc.ambient_n, &doc.rows)
}

fn parse_subspace<F: Field>(field: &F, n: usize, rows: &[Vec<String>]) -> Result<Subspace<F>, IoError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|x| field.parse(x)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if parsed.iter().any(|r| r.len() != n + 1) {
        return Err(IoError::Invalid(format!("every row must have {} entries", n + 1)));
    }
    Ok(Subspace::from_rows(field.clone(), n, parsed)?)
}

fn field_spec<F: Field>(field: &F) -> FieldSpec {
    match field.tag() {
        crate::linalg::FieldTag::Rationals => FieldSpec::Rational,
        crate::linalg::FieldTag::PrimeField(p) => FieldSpec::Prime(p),
    }
}

fn build<F: Field>(field: F, doc: &ConfigDoc) -> Result<Configuration<F>, IoError> {
    let subspaces = doc
        .subspaces
        .iter()
        .map(|rows| parse_subspace(&field, doc.n, rows))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Configuration::new(doc.n, doc.k, subspaces)?)
}

pub fn parse_configuration(text: &str) -> Result<AnyConfiguration, IoError> {
    let doc: ConfigDoc = serde_json::from_str(text)?;
    match doc.field {
        FieldSpec::Rational => Ok(AnyConfiguration::Rational(build(Rationals, &doc)?)),
        FieldSpec::Prime(p) => Ok(AnyConfiguration::Prime(build(PrimeField::new(p as u64)?, &doc)?)),
    }
}

pub fn configuration_to_json<F: Field>(c: &Configuration<F>) -> String {
    let doc = ConfigDoc {
        n: c.n(),
        k: c.k(),
        field: field_spec(c.field()),
        subspaces: c.subspaces().iter().map(rows_of).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
enum CertificateDoc {
    Special {
        dependencies: Vec<Vec<String>>,
    },
    NotSpecial {
        excluded_index: usize,
        witness: SubspaceDoc,
    },
    Undecided {
        trials_used: usize,
    },
}

pub fn certificate_value<F: Field>(cert: &Certificate<F>, field: &F) -> serde_json::Value {
    let doc = match cert {
        Certificate::Special { dependencies } => CertificateDoc::Special {
            dependencies: dependencies
                .iter()
                .map(|r| r.iter().map(|x| field.format(x)).collect())
                .collect(),
        },
        Certificate::NotSpecial {
            excluded_index,
            witness,
        } => CertificateDoc::NotSpecial {
            excluded_index: *excluded_index,
            witness: subspace_doc(witness),
        },
        Certificate::Undecided { trials_used } => CertificateDoc::Undecided {
            trials_used: *trials_used,
        },
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn certificate_to_json<F: Field>(cert: &Certificate<F>, field: &F) -> String {
    serde_json::to_string_pretty(&certificate_value(cert, field)).expect("serializable")
}

pub fn parse_certificate<F: Field>(text: &str, field: &F) -> Result<Certificate<F>, IoError> {
    let doc: CertificateDoc = serde_json::from_str(text)?;
    Ok(match doc {
        CertificateDoc::Special { dependencies } => Certificate::Special {
            dependencies: dependencies
                .iter()
                .map(|r| r.iter().map(|x| field.parse(x)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?,
        },
        CertificateDoc::NotSpecial {
            excluded_index,
            witness,
        } => Certificate::NotSpecial {
            excluded_index,
            witness: subspace_from_doc(field, &witness)?,
        },
        CertificateDoc::Undecided { trials_used } => Certificate::Undecided { trials_used },
    })
}

#[derive(Serialize, Deserialize)]
struct QuadraticDoc {
    a: String,
    b: String,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum EvidenceDoc {
    NegativeDiscriminant { discriminant: String },
    IntegerPoints { from: String, to: String },
    Counterexample { m: String, value: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertReportDoc {
    valid: bool,
    g: u64,
    a: String,
    b: String,
    c: u64,
    ratio: String,
    l_squared: String,
    quadratic: QuadraticDoc,
    discriminant: String,
    evidence: Option<EvidenceDoc>,
    failed_check: Option<FailedCheck>,
    advisory: bool,
}

fn parse_int(s: &str) -> Result<BigInt, IoError> {
    s.parse().map_err(|_| IoError::Invalid(format!("not an integer: {s:?}")))
}

pub fn cert_report_value(r: &CertReport) -> serde_json::Value {
    let evidence = r.evidence.as_ref().map(|e| match e {
        Infeasibility::NegativeDiscriminant(d) => EvidenceDoc::NegativeDiscriminant {
            discriminant: d.to_string(),
        },
        Infeasibility::IntegerPoints { from, to } => EvidenceDoc::IntegerPoints {
            from: from.to_string(),
            to: to.to_string(),
        },
        Infeasibility::Counterexample { m, value } => EvidenceDoc::Counterexample {
            m: m.to_string(),
            value: value.to_string(),
        },
    });
    let doc = CertReportDoc {
        valid: r.valid,
        g: r.g,
        a: r.a.to_string(),
        b: r.b.to_string(),
        c: r.c,
        ratio: format_rational(&r.ratio),
        l_squared: r.l_squared.to_string(),
        quadratic: QuadraticDoc {
            a: r.quadratic.0.to_string(),
            b: r.quadratic.1.to_string(),
            c: r.quadratic.2.to_string(),
        },
        discriminant: r.discriminant.to_string(),
        evidence,
        failed_check: r.failed_check,
        advisory: r.advisory,
    };
    serde_json::to_value(doc).expect("serializable")
}

pub fn cert_report_to_json(r: &CertReport) -> String {
    serde_json::to_string_pretty(&cert_report_value(r)).expect("serializable")
}

pub fn parse_cert_report(text: &str) -> Result<CertReport, IoError> {
    let doc: CertReportDoc = serde_json::from_str(text)?;
    let evidence = match doc.evidence {
        None => None,
        Some(EvidenceDoc::NegativeDiscriminant { discriminant }) => {
            Some(Infeasibility::NegativeDiscriminant(parse_int(&discriminant)?))
        }
        Some(EvidenceDoc::IntegerPoints { from, to }) => Some(Infeasibility::IntegerPoints {
            from: parse_int(&from)?,
            to: parse_int(&to)?,
        }),
        Some(EvidenceDoc::Counterexample { m, value }) => Some(Infeasibility::Counterexample {
            m: parse_int(&m)?,
            value: parse_int(&value)?,
        }),
    };
    Ok(CertReport {
        valid: doc.valid,
        g: doc.g,
        a: parse_int(&doc.a)?,
        b: parse_int(&doc.b)?,
        c: doc.c,
        ratio: parse_rational(&doc.ratio)?,
        l_squared: parse_int(&doc.l_squared)?,
        quadratic: (
            parse_int(&doc.quadratic.a)?,
            parse_int(&doc.quadratic.b)?,
            parse_int(&doc.quadratic.c)?,
        ),
        discriminant: parse_int(&doc.discriminant)?,
        evidence,
        failed_check: doc.failed_check,
        advisory: doc.advisory,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::nefcone::verify_tau_certificate;
    use crate::special_position::{decide, gen_fixture, Family};

    #[test]
    fn configuration_round_trip() {
        for fam in [
            Family::Pencil { d: 3, n: 3 },
            Family::QuadricRuling { d: 4 },
            Family::Scroll { d: 6 },
            Family::Triangle,
            Family::RandomSkew { d: 4, n: 3, seed: 7 },
        ] {
            let c = gen_fixture(fam).unwrap();
            let text = configuration_to_json(&c);
            assert_eq!(parse_configuration(&text).unwrap(), AnyConfiguration::Rational(c));
        }
        let c = gen_fixture(Family::Triangle).unwrap().reduce_mod(PrimeField::new(5).unwrap()).unwrap();
        let text = configuration_to_json(&c);
        assert!(text.contains("\"prime\": 5"));
        assert_eq!(parse_configuration(&text).unwrap(), AnyConfiguration::Prime(c));
    }

    #[test]
    fn configuration_input_is_canonicalized() {
        let text = r#"{"n": 3, "k": 2, "field": "rational",
            "subspaces": [[["2","0","0","0"],["1","1","0","0"]], [["1/2","0","0","0"],["0","0","3","0"]]]}"#;
        let AnyConfiguration::Rational(c) = parse_configuration(text).unwrap() else { panic!() };
        assert_eq!(c.subspaces()[0], gen_fixture(Family::Pencil { d: 3, n: 3 }).unwrap().subspaces()[0]);
    }

    #[test]
    fn configuration_errors() {
        assert!(parse_configuration("{").is_err());
        let bad_width = r#"{"n": 3, "k": 2, "field": "rational", "subspaces": [[["1","0","0"],["0","1","0"]], [["1","0","0"],["0","1","0"]]]}"#;
        assert!(parse_configuration(bad_width).is_err());
        let bad_prime = r#"{"n": 3, "k": 1, "field": {"prime": 4}, "subspaces": [[["1","0","0","0"]], [["0","1","0","0"]]]}"#;
        assert!(parse_configuration(bad_prime).is_err());
        let bad_entry = r#"{"n": 3, "k": 1, "field": "rational", "subspaces": [[["1/0","0","0","1"]], [["0","1","0","0"]]]}"#;
        assert!(parse_configuration(bad_entry).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        for (fam, seed) in [(Family::Pencil { d: 4, n: 3 }, 0), (Family::RandomSkew { d: 4, n: 3, seed: 3 }, 1)] {
            let c = gen_fixture(fam).unwrap();
            let cert = decide(&c, 100, seed);
            let text = certificate_to_json(&cert, &Rationals);
            assert_eq!(parse_certificate(&text, &Rationals).unwrap(), cert);
        }
        let u: Certificate<Rationals> = Certificate::Undecided { trials_used: 5 };
        assert_eq!(parse_certificate(&certificate_to_json(&u, &Rationals), &Rationals).unwrap(), u);
    }

    #[test]
    fn cert_report_round_trip() {
        for (g, a, b, tau, c) in [(6, 32, 13, rat(9, 4), 4), (6, 29, 13, rat(9, 4), 4), (5, 3, 1, rat(0, 1), 0)] {
            let r = verify_tau_certificate(g, &BigInt::from(a), &BigInt::from(b), &tau, c).unwrap();
            let text = cert_report_to_json(&r);
            assert_eq!(parse_cert_report(&text).unwrap(), r);
        }
        let r = verify_tau_certificate(6, &BigInt::from(32), &BigInt::from(13), &rat(9, 4), 4).unwrap();
        let v = cert_report_value(&r);
        assert_eq!(v["l_squared"], "179");
        assert_eq!(v["ratio"], "32/13");
        assert_eq!(v["evidence"]["discriminant"], "-5191");
    }
}
