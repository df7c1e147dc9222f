//! Serialization of command results.
//!
//! Every command produces a list of flat records. JSON wraps them in a
//! document carrying the schema version and an echo of the command; CSV
//! writes the same records under a header row.

use std::fmt;
use std::io::{self, Write};

use serde::Serialize;

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Document<'a, C: Serialize, E: Serialize, R: Serialize> {
    schema_version: u32,
    command: &'a C,
    #[serde(flatten)]
    extra: &'a E,
    records: &'a [R],
}

/// Fields shown only in the JSON document.
#[derive(Serialize)]
pub struct NoExtra {}

pub fn write_records<C, E, R>(
    out: &mut impl Write,
    format: Format,
    command: &C,
    extra: &E,
    records: &[R],
) -> io::Result<()>
where
    C: Serialize,
    E: Serialize,
    R: Serialize,
{
    match format {
        Format::Json => {
            let doc = Document {
                schema_version: SCHEMA_VERSION,
                command,
                extra,
                records,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(true)
                .from_writer(&mut *out);
            for r in records {
                w.serialize(r).map_err(io::Error::other)?;
            }
            w.flush()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Usage,
    Indeterminate,
    Io,
}

impl ErrorKind {
    pub fn exit_code(self) -> u8 {
        match self {
            ErrorKind::Usage | ErrorKind::Io => 2,
            ErrorKind::Indeterminate => 3,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub kind: ErrorKind,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl fmt::Display) -> Self {
        Failure {
            kind: ErrorKind::Usage,
            message: message.to_string(),
        }
    }
}

impl From<wdbounds::Error> for Failure {
    fn from(e: wdbounds::Error) -> Self {
        let kind = match e {
            wdbounds::Error::PrecisionCapExceeded { .. } => ErrorKind::Indeterminate,
            _ => ErrorKind::Usage,
        };
        Failure {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            kind: ErrorKind::Io,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: ErrorKind,
    exit_code: u8,
    message: &'a str,
}

#[derive(Serialize)]
struct ErrorDocument<'a> {
    schema_version: u32,
    error: ErrorBody<'a>,
}

/// One-line JSON error object for the error stream.
pub fn error_json(f: &Failure) -> String {
    let doc = ErrorDocument {
        schema_version: SCHEMA_VERSION,
        error: ErrorBody {
            kind: f.kind,
            exit_code: f.kind.exit_code(),
            message: &f.message,
        },
    };
    serde_json::to_string(&doc).expect("serializable")
}
