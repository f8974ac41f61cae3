use std::process::{Command, Output};

fn monofun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monofun"))
        .args(args)
        .output()
        .expect("running monofun")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["parents", "{1,2,3},{3,4}"], 0),
        (&["--help"], 0),
        (&["--version"], 0),
        (&[], 1),
        (&["frobnicate"], 1),
        (&["walk", "--dir", "sideways"], 1),
        (&["parents", "{1},{1,2}"], 2),
        (&["parents", "x1 ^ x2"], 2),
        (&["validate", "--table", "0110"], 2),
        (&["validate", "--table", "0001"], 0),
        (&["--p", "30", "walk"], 3),
        (&["count", "--maxp", "6"], 0),
        (&["count", "--maxp", "10"], 3),
    ];
    for (args, code) in cases {
        let o = monofun(args);
        assert_eq!(o.status.code(), Some(*code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn csv_neighbors() {
    let o = monofun(&["--format", "csv", "parents", "{1,2,3},{3,4}"]);
    assert_eq!(
        stdout(&o),
        "function,rule,direction,true_set_delta\n\
         \"{1,3},{2,3},{3,4}\",R3,parent,2\n\
         \"{3,4},{1,2,3},{1,2,4}\",R1,parent,1\n"
    );
}

#[test]
fn count_table() {
    let o = monofun(&["count", "--maxp", "5"]);
    assert_eq!(
        stdout(&o),
        "p,M,N,enumerated\n1,3,1,1\n2,6,2,2\n3,20,9,9\n4,168,114,114\n5,7581,6894,6894\n"
    );
}

#[test]
fn validation_names_property_and_witness() {
    let o = monofun(&["--format", "json", "validate", "--table", "0101"]);
    assert_eq!(o.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["violation"]["property"], "degenerate");
    assert_eq!(report["violation"]["var"], 2);
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["code"], "invalid_table");
}

#[test]
fn walks_are_seeded() {
    let a = monofun(&["--p", "6", "--seed", "3", "--format", "json", "walk"]);
    let b = monofun(&["--p", "6", "--seed", "3", "--format", "json", "walk"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn experiment_csv_columns() {
    let o = monofun(&["--format", "csv", "experiment", "--pmin", "2", "--pmax", "3", "--traces", "10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "p,direction,traces,mean_len,std_len,cum_r1,cum_r2,cum_r3,per_step_r1,per_step_r2,per_step_r3,mean_ms,q1_ms,q3_ms"
    );
    assert_eq!(lines.count(), 2);
}
