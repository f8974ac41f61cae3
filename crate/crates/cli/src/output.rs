//! Text and CSV renderings for the CLI.

use monofun::walker::WalkStats;
use monofun::{render_function, Function, NeighborResult, SignStructure, Style, ValidationReport};

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).expect("writing CSV to memory");
    String::from_utf8(w.into_inner().expect("flushing CSV to memory")).expect("CSV is UTF-8")
}

pub fn neighbors_text(list: &[NeighborResult], signs: &SignStructure) -> String {
    let mut out = String::new();
    for n in list {
        let sets = render_function(&n.neighbor, signs, Style::Sets).unwrap_or_default();
        let expr = render_function(&n.neighbor, signs, Style::Expr).unwrap_or_default();
        out.push_str(&format!("{} {:+} {sets}  [{expr}]\n", n.rule, n.rule_delta()));
    }
    if list.is_empty() {
        out.push_str("(none)\n");
    }
    out
}

pub fn neighbors_csv(list: &[NeighborResult], signs: &SignStructure) -> String {
    csv_string(|w| {
        w.write_record(["function", "rule", "direction", "true_set_delta"])?;
        for n in list {
            w.write_record([
                render_function(&n.neighbor, signs, Style::Sets).unwrap_or_default(),
                n.rule.to_string(),
                format!("{:?}", n.direction).to_lowercase(),
                n.rule_delta().to_string(),
            ])?;
        }
        Ok(())
    })
}

pub fn function_text(f: &Function, signs: &SignStructure, true_set: Option<u128>) -> String {
    let sets = render_function(f, signs, Style::Sets).unwrap_or_default();
    let expr = render_function(f, signs, Style::Expr).unwrap_or_default();
    match true_set {
        Some(n) => format!("valid p={} {sets}  [{expr}]  |T|={n}\n", f.p()),
        None => format!("valid p={} {sets}  [{expr}]\n", f.p()),
    }
}

pub fn report_text(r: &ValidationReport) -> String {
    let mut out = String::new();
    for v in &r.variables {
        out.push_str(&format!(
            "x{}: positive={} negative={} essential={}\n",
            v.var, v.positive, v.negative, v.essential
        ));
    }
    match &r.violation {
        None => out.push_str("pass\n"),
        Some(v) => out.push_str(&format!(
            "fail: x{} is {} (witness states {} -> {})\n",
            v.var, v.property, v.witness.0, v.witness.1
        )),
    }
    out
}

pub const EXPERIMENT_COLUMNS: [&str; 14] = [
    "p",
    "direction",
    "traces",
    "mean_len",
    "std_len",
    "cum_r1",
    "cum_r2",
    "cum_r3",
    "per_step_r1",
    "per_step_r2",
    "per_step_r3",
    "mean_ms",
    "q1_ms",
    "q3_ms",
];

fn stats_record(s: &WalkStats) -> Vec<String> {
    let mut rec = vec![
        s.p.to_string(),
        s.direction.to_string(),
        s.traces.to_string(),
        format!("{:.4}", s.mean_len),
        format!("{:.4}", s.std_len),
    ];
    rec.extend(s.cumulative.iter().map(|v| format!("{v:.4}")));
    rec.extend(s.per_step.iter().map(|v| format!("{v:.4}")));
    rec.extend([s.mean_ms, s.q1_ms, s.q3_ms].iter().map(|v| format!("{v:.3}")));
    rec
}

pub fn experiment_csv(stats: &[WalkStats]) -> String {
    csv_string(|w| {
        w.write_record(EXPERIMENT_COLUMNS)?;
        for s in stats {
            w.write_record(stats_record(s))?;
        }
        Ok(())
    })
}

pub fn experiment_text(stats: &[WalkStats]) -> String {
    let mut out = format!(
        "{:>3} {:>5} {:>6} {:>10} {:>8} {:>12} {:>12} {:>10} {:>9}\n",
        "p", "dir", "traces", "mean_len", "std_len", "cum_r1", "cum_r2", "cum_r3", "mean_ms"
    );
    for s in stats {
        out.push_str(&format!(
            "{:>3} {:>5} {:>6} {:>10.2} {:>8.2} {:>12.2} {:>12.2} {:>10.2} {:>9.2}\n",
            s.p,
            s.direction.to_string(),
            s.traces,
            s.mean_len,
            s.std_len,
            s.cumulative[0],
            s.cumulative[1],
            s.cumulative[2],
            s.mean_ms
        ));
    }
    out
}
