use serde_json::{Map, Value};
use starlike_core::bounds::{format_sig, json_sig};

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map(Into::into).unwrap_or(Cell::Empty)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Num(x) => format_sig(*x),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(n) => Value::from(*n),
            Cell::Num(x) => json_sig(*x),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Empty => Value::Null,
        }
    }
}

/// A rectangular table rendered as CSV or as a JSON object with a `rows` array.
#[derive(Debug, Clone)]
pub struct Table {
    pub kind: &'static str,
    pub meta: Vec<(&'static str, Value)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(kind: &'static str, columns: &[&'static str]) -> Self {
        Self {
            kind,
            meta: Vec::new(),
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn meta(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.meta.push((key, value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("kind".into(), Value::from(self.kind));
        for (k, v) in &self.meta {
            obj.insert((*k).into(), v.clone());
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut r = Map::new();
                for (c, cell) in self.columns.iter().zip(row) {
                    r.insert((*c).into(), cell.json());
                }
                Value::Object(r)
            })
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
        Value::Object(obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_formats() {
        let mut t = Table::new("demo", &["n", "x", "note"]).meta("alpha1", 0.5);
        t.push(vec![1usize.into(), (1.0 / 3.0).into(), Cell::Empty]);
        t.push(vec![2usize.into(), 2.0.into(), "ok".into()]);
        assert_eq!(t.to_csv(), "n,x,note\n1,0.333333333333,\n2,2,ok\n");
        let j = t.to_json();
        assert_eq!(j["kind"], "demo");
        assert_eq!(j["alpha1"], 0.5);
        assert_eq!(j["rows"][0]["x"], 0.333333333333);
        assert!(j["rows"][0]["note"].is_null());
    }
}
