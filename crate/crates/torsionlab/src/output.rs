//! Deterministic emitters. JSON is built by hand so key order is fixed by
//! construction and every float is printed with 15 significant digits;
//! identical invocations therefore produce byte-identical output.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other}")),
        }
    }
}

/// 15 significant digits, fixed layout.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0.0e0".into();
    }
    format!("{x:.14e}")
}

pub struct JsonObject {
    buf: String,
    first: bool,
}

impl JsonObject {
    pub fn new() -> Self {
        Self {
            buf: String::from("{"),
            first: true,
        }
    }

    fn key(&mut self, k: &str) {
        if !self.first {
            self.buf.push(',');
        }
        self.first = false;
        self.buf.push('"');
        self.buf.push_str(k);
        self.buf.push_str("\":");
    }

    pub fn num(mut self, k: &str, v: f64) -> Self {
        self.key(k);
        self.buf.push_str(&fmt_f64(v));
        self
    }

    pub fn int(mut self, k: &str, v: i64) -> Self {
        self.key(k);
        self.buf.push_str(&v.to_string());
        self
    }

    pub fn str(mut self, k: &str, v: &str) -> Self {
        self.key(k);
        self.buf.push('"');
        // the strings we emit are plain identifiers, but escape anything odd
        for c in v.chars() {
            match c {
                '"' => self.buf.push_str("\\\""),
                '\\' => self.buf.push_str("\\\\"),
                c if (c as u32) < 0x20 => self.buf.push_str(&format!("\\u{:04x}", c as u32)),
                c => self.buf.push(c),
            }
        }
        self.buf.push('"');
        self
    }

    pub fn bool(mut self, k: &str, v: bool) -> Self {
        self.key(k);
        self.buf.push_str(if v { "true" } else { "false" });
        self
    }

    pub fn raw(mut self, k: &str, v: &str) -> Self {
        self.key(k);
        self.buf.push_str(v);
        self
    }

    pub fn finish(mut self) -> String {
        self.buf.push('}');
        self.buf
    }
}

pub struct JsonArray {
    buf: String,
    first: bool,
}

impl JsonArray {
    pub fn new() -> Self {
        Self {
            buf: String::from("["),
            first: true,
        }
    }
    pub fn push_raw(&mut self, v: &str) {
        if !self.first {
            self.buf.push(',');
        }
        self.first = false;
        self.buf.push_str(v);
    }
    pub fn finish(mut self) -> String {
        self.buf.push(']');
        self.buf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_fixed_width() {
        assert_eq!(fmt_f64(1.0), "1.00000000000000e0");
        assert_eq!(fmt_f64(0.0), "0.0e0");
        assert_eq!(fmt_f64(-0.25), "-2.50000000000000e-1");
    }

    #[test]
    fn object_key_order_is_insertion_order() {
        let s = JsonObject::new().str("b", "x").num("a", 1.5).finish();
        assert_eq!(s, r#"{"b":"x","a":1.50000000000000e0}"#);
    }

    #[test]
    fn emitted_json_parses() {
        let s = JsonObject::new()
            .str("name", "t\"est")
            .num("v", 0.1)
            .raw("arr", &{
                let mut a = JsonArray::new();
                a.push_raw("1");
                a.push_raw("2");
                a.finish()
            })
            .finish();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["arr"][1], 2);
        assert_eq!(v["name"], "t\"est");
    }
}
