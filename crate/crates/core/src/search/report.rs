//! Versioned plain-text search reports.

use std::time::Duration;

use sha2::{Digest, Sha256};

use crate::homology::{coboundary_of_graph, LinkGraph};
use crate::simplex::Field;

pub const REPORT_FORMAT: u32 = 1;

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub kind: String,
    pub n: usize,
    pub field: Field,
    pub max_size: usize,
    pub maximizers: usize,
    /// Maximizing link graphs, sorted by their edge lists.
    pub witnesses: Vec<LinkGraph>,
    pub enumerated: u64,
    pub wall_time: Duration,
    /// Extra `key: value` lines, in order.
    pub extra: Vec<(String, String)>,
}

impl SearchReport {
    /// Short digest of the inputs that determine the result.
    pub fn config_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{}|{}|{}", self.kind, self.n, self.field));
        for (k, v) in self.extra.iter().filter(|(k, _)| k.starts_with("config.")) {
            h.update(format!("|{k}={v}"));
        }
        h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.extra.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Writes the report; at most `witness_limit` witness blocks are included.
    pub fn to_text(&self, witness_limit: usize) -> String {
        let mut out = format!("format: {REPORT_FORMAT}\n");
        let mut kv = |k: &str, v: String| out.push_str(&format!("{k}: {v}\n"));
        kv("kind", self.kind.clone());
        kv("n", self.n.to_string());
        kv("field", self.field.to_string());
        kv("max_hypercut", self.max_size.to_string());
        kv("maximizers", self.maximizers.to_string());
        kv("enumerated", self.enumerated.to_string());
        kv("wall_time_ms", self.wall_time.as_millis().to_string());
        kv("config_hash", self.config_hash());
        for (k, v) in &self.extra {
            kv(k, v.clone());
        }
        let shown = self.witnesses.len().min(witness_limit);
        kv("witnesses_shown", shown.to_string());
        for (i, w) in self.witnesses.iter().take(shown).enumerate() {
            out.push_str(&format!("--- witness {}\n", i + 1));
            let size = coboundary_of_graph(w).len();
            out.push_str(&w.to_face_set().to_text(&[format!("link of vertex {}; coboundary size {size}", w.apex())]));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_witness_block() {
        let g = LinkGraph::from_edges(5, 4, [(0, 1)]).unwrap();
        let r = SearchReport {
            kind: "exhaustive".into(),
            n: 5,
            field: Field::F2,
            max_size: 3,
            maximizers: 1,
            witnesses: vec![g],
            enumerated: 64,
            wall_time: Duration::from_millis(3),
            extra: vec![("config.apex".into(), "4".into())],
        };
        let t = r.to_text(10);
        assert!(t.starts_with("format: 1\nkind: exhaustive\n"));
        assert!(t.contains("--- witness 1\n# link of vertex 4; coboundary size 3\n5 1\n0 1\n"));
        assert_eq!(r.config_hash().len(), 16);
    }
}
