//! A diffable JSON document format for rooted premaniplexes.
//!
//! One self-describing object per premaniplex: `rank`, `flag_count`,
//! `connections` (row i is the full image array of s_i), an optional
//! `base_flag` defaulting to 0, and an optional `name`. Image arrays rather
//! than cycle notation keep round-trips bit-exact without a permutation
//! parser.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::premaniplex::{Flag, Premaniplex, Rooted};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub rank: usize,
    pub flag_count: usize,
    #[serde(skip_serializing_if = "is_zero", default)]
    pub base_flag: Flag,
    pub connections: Vec<Vec<Flag>>,
}

fn is_zero(f: &Flag) -> bool {
    *f == 0
}

impl Document {
    pub fn from_rooted(p: &Rooted) -> Document {
        Document {
            name: None,
            rank: p.rank(),
            flag_count: p.flag_count(),
            base_flag: p.base(),
            connections: p.graph().connections().to_vec(),
        }
    }

    pub fn with_name(p: &Rooted, name: &str) -> Document {
        Document { name: Some(name.to_string()), ..Document::from_rooted(p) }
    }

    /// Validates the declared shape against the connection table, then
    /// builds the premaniplex. Shape mismatches report the offending field;
    /// structural problems (non-involutions, broken commutation,
    /// disconnectedness) come back as the corresponding validation errors.
    pub fn to_rooted(&self) -> Result<Rooted> {
        if self.connections.len() != self.rank {
            return Err(Error::Schema(format!(
                "connections has {} rows but rank is {}",
                self.connections.len(),
                self.rank
            )));
        }
        for (i, row) in self.connections.iter().enumerate() {
            if row.len() != self.flag_count {
                return Err(Error::Schema(format!(
                    "connections[{i}] has {} entries but flag_count is {}",
                    row.len(),
                    self.flag_count
                )));
            }
        }
        Rooted::new(Premaniplex::new(self.connections.clone())?, self.base_flag)
    }
}

/// Parses a JSON document. Malformed JSON or missing fields become `Schema`
/// errors carrying serde's position information.
pub fn parse(text: &str) -> Result<Document> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}

/// Serializes a document to pretty-printed JSON with a trailing newline.
pub fn serialize(doc: &Document) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serialization cannot fail");
    out.push('\n');
    out
}

/// Reads and parses a document file.
pub fn read_file(path: &std::path::Path) -> Result<Rooted> {
    parse(&std::fs::read_to_string(path)?)?.to_rooted()
}

/// Writes a rooted premaniplex to a document file.
pub fn write_file(path: &std::path::Path, p: &Rooted) -> Result<()> {
    std::fs::write(path, serialize(&Document::from_rooted(p)))?;
    Ok(())
}
