use serde::{Deserialize, Serialize};

/// One rendered value. Expressions use the canonical scalar rendering and
/// parse back with the same grammar as problem files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Expr(String),
    Vector(Vec<String>),
    /// Weyl group element as a 1-based reduced word.
    Word(Vec<usize>),
    Flag(bool),
    Count(usize),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub metadata: Vec<Entry>,
    pub sections: Vec<Section>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section { title: title.into(), entries: Vec::new() }
    }

    pub fn push(&mut self, key: impl Into<String>, value: Value) -> &mut Self {
        self.entries.push(Entry { key: key.into(), value });
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|e| e.key == key).map(|e| &e.value)
    }
}

impl Report {
    pub fn section(&self, title: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.title == title)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for e in &self.metadata {
            out.push_str(&format!("{}: {}\n", e.key, e.value.text()));
        }
        for s in &self.sections {
            out.push_str(&format!("\n[{}]\n", s.title));
            let width = s.entries.iter().map(|e| e.key.chars().count()).max().unwrap_or(0);
            for e in &s.entries {
                let pad = width - e.key.chars().count();
                out.push_str(&format!("  {}{} = {}\n", e.key, " ".repeat(pad), e.value.text()));
            }
        }
        out
    }
}

impl Value {
    pub fn text(&self) -> String {
        match self {
            Value::Expr(s) | Value::Text(s) => s.clone(),
            Value::Vector(v) => format!("[{}]", v.join(", ")),
            Value::Word(w) if w.is_empty() => "id".into(),
            Value::Word(w) => w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" "),
            Value::Flag(b) => b.to_string(),
            Value::Count(n) => n.to_string(),
        }
    }
}
