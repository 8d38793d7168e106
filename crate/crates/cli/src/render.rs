use serde_json::Value;

/// What a subcommand produced: both renderings and the exit status.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(json: Value, text: String) -> Self {
        Outcome { json, text, code: 0 }
    }

    pub fn with_status(json: Value, text: String, passed: bool) -> Self {
        Outcome { json, text, code: if passed { 0 } else { crate::EXIT_FAILED } }
    }
}

pub fn json_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

/// Left-aligned columns separated by two spaces; trailing blanks trimmed.
pub fn table<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate().take(cols) {
            width[i] = width[i].max(c.as_ref().chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(width[i] - c.chars().count() + 2));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(|c| c.as_ref()).collect()));
        out.push('\n');
    }
    out
}

/// `key  value` lines with aligned values.
pub fn fields(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let t = table(&["a", "long"], &[vec!["xyz", "1"], vec!["p", "22"]]);
        assert_eq!(t, "a    long\nxyz  1\np    22\n");
    }

    #[test]
    fn field_lines() {
        assert_eq!(fields(&[("dim", "42".into()), ("group", "Sp_8".into())]), "dim    42\ngroup  Sp_8\n");
    }
}
