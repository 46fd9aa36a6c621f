use std::process::{Command, Output};

fn qyb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qyb"))
        .args(args)
        .output()
        .expect("spawn qyb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ybe_check_exits_zero() {
    let o = qyb(&["rmat", "--family", "glq", "--n", "2", "--check", "ybe"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("ok\n"));
}

#[test]
fn failing_check_exits_one() {
    // Ř = q on C¹: the second Hecke eigenvalue never occurs
    let o = qyb(&["rmat", "--family", "glq", "--n", "1", "--check", "char"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL hecke-minimal"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["rmat", "--family", "glq", "--n", "0"],
        &["rmat", "--family", "nope", "--n", "2"],
        &[
            "chain", "--family", "glq", "--n", "2", "--sites", "2", "--check", "bogus",
        ],
        &["qdim", "--algebra", "hecke", "--diagram", "2,x", "--d", "2"],
    ] {
        assert_eq!(qyb(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn qdim_example() {
    let o = qyb(&["qdim", "--algebra", "hecke", "--diagram", "1,1", "--d", "2"]);
    assert_eq!(stdout(&o), "q^-4\n");
}

#[test]
fn emitted_rmatrix() {
    let path = std::env::temp_dir().join(format!("qyb-emit-{}.json", std::process::id()));
    let o = qyb(&[
        "rmat",
        "--family",
        "glq",
        "--n",
        "2",
        "--check",
        "ybe",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(
        s.trim_end(),
        r#"{"N":2,"sites":2,"entries":[[0,0,"q"],[1,1,"q - q^-1"],[1,2,"1"],[2,1,"1"],[3,3,"q"]]}"#
    );
}

#[test]
fn trefoil_invariant() {
    let o = qyb(&[
        "invariant",
        "--family",
        "glq",
        "--n",
        "2",
        "--strands",
        "2",
        "--braid",
        "1 1 1",
        "--normalize",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("q^-2 + q^-6 - q^-8"), "{}", stdout(&o));
}

#[test]
fn same_argv_same_bytes() {
    let runs: [&[&str]; 4] = [
        &["suite", "--format", "json"],
        &[
            "chain",
            "--family",
            "glq",
            "--n",
            "2",
            "--sites",
            "3",
            "--emit",
            "hamiltonian",
        ],
        &[
            "graph",
            "--algebra",
            "bmw",
            "--levels",
            "3",
            "--format",
            "dot",
        ],
        &[
            "baxter", "--family", "soq", "--n", "3", "--branch", "minus", "--format", "json",
        ],
    ];
    for args in runs {
        let a = qyb(args);
        let b = Command::new(env!("CARGO_BIN_EXE_qyb"))
            .args(args)
            .env("QYB_THREADS", "1")
            .output()
            .unwrap();
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
