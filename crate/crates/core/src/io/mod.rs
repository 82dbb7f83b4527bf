//! Text formats: polynomial and operator syntax, problem files and the
//! certificate JSON document.

mod certificate;
mod format;
mod parse;
mod problem;

pub use certificate::{certificate_from_json, certificate_to_json, CertificateDoc, ComponentDoc, RingDoc};
pub use format::*;
pub use parse::{parse_operator, parse_polynomial};
pub use problem::{parse_problem, ProblemFile};
