//! The certificate JSON document.

use serde::{Deserialize, Serialize};

use crate::decomp::{Certificate, Component};
use crate::io::{format_polynomial, parse_operator, parse_polynomial};
use crate::localize::Splitting;
use crate::{Error, QIdeal, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDoc {
    pub vars: Vec<String>,
    pub field: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub prime: Vec<String>,
    pub free_vars: Vec<String>,
    pub operators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nil: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub ring: RingDoc,
    pub ideal: Vec<String>,
    pub components: Vec<ComponentDoc>,
}

impl CertificateDoc {
    pub fn from_certificate(cert: &Certificate) -> Self {
        let v = &cert.vars;
        CertificateDoc {
            ring: RingDoc {
                vars: v.clone(),
                field: "QQ".into(),
            },
            ideal: cert.ideal.gens().iter().map(|g| format_polynomial(g, v)).collect(),
            components: cert
                .components
                .iter()
                .map(|c| ComponentDoc {
                    prime: c.prime.gens().iter().map(|g| format_polynomial(g, v)).collect(),
                    free_vars: c.splitting.free().iter().map(|&i| v[i].clone()).collect(),
                    operators: c.operators.iter().map(|o| o.format_with(v)).collect(),
                    nil: c.nil,
                })
                .collect(),
        }
    }

    pub fn to_certificate(&self) -> Result<Certificate> {
        if self.ring.field != "QQ" {
            return Err(Error::Semantic(format!("unsupported field '{}'", self.ring.field)));
        }
        let v = &self.ring.vars;
        let n = v.len();
        let polys = |gens: &[String]| -> Result<QIdeal> {
            let ps = gens
                .iter()
                .map(|g| parse_polynomial(g, v))
                .collect::<Result<Vec<_>>>()?;
            Ok(QIdeal::new(n, ps))
        };
        let ideal = polys(&self.ideal)?;
        let components = self
            .components
            .iter()
            .map(|c| {
                let prime = polys(&c.prime)?;
                let free = c
                    .free_vars
                    .iter()
                    .map(|name| {
                        v.iter()
                            .position(|w| w == name)
                            .ok_or_else(|| Error::Semantic(format!("unknown free variable '{name}'")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let splitting = Splitting::with_free(&prime, &free)?;
                let operators = c
                    .operators
                    .iter()
                    .map(|o| {
                        let op = parse_operator(o, v)?;
                        if op.terms().any(|(a, _)| !a.only_in(splitting.bound())) {
                            return Err(Error::Semantic(format!(
                                "operator '{o}' differentiates a free variable"
                            )));
                        }
                        Ok(op)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Component {
                    prime,
                    splitting,
                    operators,
                    nil: c.nil,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Certificate {
            vars: v.clone(),
            ideal,
            components,
        })
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn certificate_to_json(cert: &Certificate) -> String {
    let mut s = serde_json::to_string_pretty(&CertificateDoc::from_certificate(cert)).expect("serializable");
    s.push('\n');
    s
}

pub fn certificate_from_json(text: &str) -> Result<Certificate> {
    let doc: CertificateDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_certificate()
}
