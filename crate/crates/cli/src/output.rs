use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

/// One machine-readable result. Field order is fixed by declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub input: String,
    pub result: Payload,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Text(String),
    List(Vec<String>),
    Map(IndexMap<String, Payload>),
}

impl Payload {
    pub fn text(s: impl ToString) -> Self {
        Payload::Text(s.to_string())
    }

    pub fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> Self {
        Payload::List(items.into_iter().map(|x| x.to_string()).collect())
    }

    pub fn map<'a>(entries: impl IntoIterator<Item = (&'a str, Payload)>) -> Self {
        Payload::Map(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }
}

impl OutputRecord {
    pub fn new(command: &str, input: impl ToString, result: Payload, provenance: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            input: input.to_string(),
            result,
            provenance: provenance.to_string(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub text: String,
    pub records: Vec<OutputRecord>,
}

impl Report {
    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(&self.records)?;
        s.push('\n');
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_order_and_round_trip() {
        let rec = OutputRecord::new(
            "psi",
            "n=2",
            Payload::map([("decimal", Payload::text(4)), ("factors", Payload::list(["2^2"]))]),
            "p",
        );
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"command":"psi","input":"n=2","result":{"decimal":"4","factors":["2^2"]},"provenance":"p"}"#
        );
        assert_eq!(serde_json::from_str::<OutputRecord>(&json).unwrap(), rec);
    }
}
