use std::io::Write;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quiverlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// Runs `first`, feeds its output to `second`.
fn pipe(first: &[&str], second: &[&str]) -> Output {
    let a = run(first, None);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    run(second, Some(&stdout(&a)))
}

#[test]
fn radical_of_u2_through_a_pipe() {
    let o = pipe(&["algebra", "build", "upper-triangular", "2"], &["algebra", "radical"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "dim J = 1"), "{out}");
    assert!(out.contains("J^1: dim 1 [E12]"));
}

#[test]
fn paths_of_a2() {
    let o = run(&["quiver", "paths", &data("a2.quiver")], None);
    assert_eq!(stdout(&o), "p1\np2\nh\n");
    assert_eq!(code(&o), 0);
}

#[test]
fn path_algebra_of_a2_is_three_dimensional() {
    let o = run(&["quiver", "path-algebra", &data("a2.quiver")], None);
    let out = stdout(&o);
    assert!(out.starts_with("algebra dim 3\n"));
    assert!(out.contains("mul p1 h = h") && out.contains("mul h p2 = h"));
    let info = run(&["algebra", "info"], Some(&out));
    assert!(stdout(&info).contains("basic: true"));
}

#[test]
fn gallery_passes() {
    let o = run(&["paper-gallery"], None);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().count() >= 20);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
}

#[test]
fn exit_codes() {
    // malformed text
    assert_eq!(code(&run(&["algebra", "radical"], Some("algebra dim two\n"))), 2);
    assert_eq!(code(&run(&["quiver", "info", &data("parallel.cat")], None)), 2);
    assert_eq!(code(&run(&["quiver", "info", "/nonexistent/file"], None)), 2);
    assert_eq!(code(&run(&["quiver", "paths", &data("loop_no_relations.quiver")], None)), 2);
    // well formed but invalid
    let bad_unit = "algebra dim 1\nbasis: e\nunit: e\nmul e e = 2*e\n";
    let o = run(&["algebra", "info"], Some(bad_unit));
    assert_eq!(code(&o), 1);
    assert!(!o.stderr.is_empty());
    assert_eq!(code(&run(&["cat", "validate", &data("parallel_broken.cat")], None)), 1);
    assert_eq!(code(&run(&["rep", "validate", &data("loop_bad.rep")], None)), 1);
    assert_eq!(code(&run(&["bound", "check", &data("loop_no_relations.quiver")], None)), 1);
    assert_eq!(code(&run(&["vquiver", "path-algebra", &data("cyclic.vquiver")], None)), 1);
    // passing checks
    assert_eq!(code(&run(&["cat", "validate", &data("parallel.cat")], None)), 0);
}

#[test]
fn failure_lines_name_the_invariant() {
    let o = run(&["cat", "validate", &data("parallel_broken.cat")], None);
    assert_eq!(stdout(&o), "FAIL category identity law fails for `g`\n");
    let o = run(&["rep", "validate", &data("loop_bad.rep")], None);
    assert!(stdout(&o).contains("FAIL relations relation 0 does not act as zero"));
}

#[test]
fn bound_quivers() {
    let o = run(&["bound", "check", &data("two_loops.quiver")], None);
    assert!(stdout(&o).starts_with("PASS admissible R^3 "));
    let o = run(&["bound", "construct", &data("two_loops.quiver")], None);
    assert!(stdout(&o).starts_with("algebra dim 4\nbasis: p1 alpha beta beta.alpha\n"));
    let o = run(&["bound", "check", &data("commutative_square.quiver")], None);
    assert_eq!(code(&o), 0);
}

#[test]
fn presentation_round_trip() {
    for (family, n) in [("upper-triangular", "3"), ("diagonal", "2"), ("upper-triangular", "4")] {
        let original = stdout(&run(&["algebra", "build", family, n], None));
        let presented = run(&["algebra", "present"], Some(&original));
        assert_eq!(code(&presented), 0, "{family}");
        assert_eq!(code(&run(&["bound", "check"], Some(&stdout(&presented)))), 0, "{family}");
        let rebuilt = run(&["bound", "construct"], Some(&stdout(&presented)));
        assert_eq!(stdout(&rebuilt).lines().next(), original.lines().next(), "{family}");
    }
    let square = stdout(&run(&["bound", "construct", &data("commutative_square.quiver")], None));
    let presented = run(&["algebra", "present"], Some(&square));
    assert!(stdout(&presented).contains("relation: "));
    // loops in the Gabriel quiver
    let o = pipe(&["algebra", "build", "truncated-poly", "4"], &["algebra", "present"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn gabriel_of_mixed_algebra() {
    let o = pipe(&["algebra", "build", "triangular-dual-numbers"], &["algebra", "gabriel"]);
    let out = stdout(&o);
    assert!(out.contains("edges 1 2: dim 1"));
    assert!(out.contains("edges 2 2: dim 1"));
    let info = run(&["vquiver", "info"], Some(&out));
    assert!(stdout(&info).contains("acyclic: false"));
}

#[test]
fn idempotents_and_vquivers() {
    let o = pipe(&["algebra", "build", "upper-triangular", "3"], &["algebra", "idempotents"]);
    assert!(stdout(&o).ends_with("PASS idempotents 3 primitive orthogonal, sum 1\n"));
    let o = run(&["vquiver", "path-algebra", &data("kronecker.vquiver")], None);
    assert!(stdout(&o).starts_with("algebra dim 4\n"));
    let o = run(&["adjunction", "unit", &data("kronecker.vquiver")], None);
    assert!(stdout(&o).starts_with("PASS unit-iso"));
}

#[test]
fn representations() {
    let o = run(&["rep", "validate", &data("a2.rep")], None);
    assert_eq!(stdout(&o), "PASS shapes dims [1, 2]\n");
    let o = run(&["rep", "convert", &data("a2.rep")], None);
    assert!(stdout(&o).starts_with("module right dim 3\n"));
}

#[test]
fn seeded_output_is_reproducible() {
    let algebra = stdout(&run(&["algebra", "build", "upper-triangular", "3"], None));
    let a = run(&["--seed", "11", "adjunction", "counit", "--sections", "4"], Some(&algebra));
    let b = run(&["--seed", "11", "adjunction", "counit", "--sections", "4"], Some(&algebra));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let t1 = run(&["--seed", "3", "adjunction", "triangles"], None);
    let t2 = run(&["--seed", "3", "adjunction", "triangles"], None);
    assert_eq!(code(&t1), 0);
    assert_eq!(t1.stdout, t2.stdout);
    assert!(stdout(&t1).lines().count() >= 20);
}

#[test]
fn triangles_on_files() {
    let algebra = stdout(&run(&["algebra", "build", "upper-triangular", "2"], None));
    let dir = std::env::temp_dir().join(format!("quiverlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("u2.algebra");
    std::fs::write(&path, algebra).unwrap();
    let o = run(&["adjunction", "triangles", &data("kronecker.vquiver"), path.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn finite_categories() {
    let o = run(&["cat", "galois", &data("sierpinski.galois")], None);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS galois"));
    let o = run(
        &[
            "cat",
            "equivalence",
            "--source",
            &data("parallel.cat"),
            "--target",
            &data("parallel.cat"),
            "--functor",
            &data("swap.functor"),
        ],
        None,
    );
    assert_eq!(code(&o), 0);
    let o = run(
        &["cat", "quotient", "--category", &data("parallel.cat"), "--congruence", &data("merge.congruence")],
        None,
    );
    let quotient = stdout(&o);
    assert!(quotient.contains("mor [f]: A -> B"));
    assert_eq!(code(&run(&["cat", "validate"], Some(&quotient))), 0);
    let o = run(
        &[
            "cat",
            "adjunction",
            "--source",
            &data("parallel.cat"),
            "--target",
            &data("parallel.cat"),
            "--left",
            &data("identity.functor"),
            "--right",
            &data("identity.functor"),
            "--phi",
            &data("identity.phi"),
        ],
        None,
    );
    assert_eq!(stdout(&o), "PASS adjunction natural hom-set bijections\n");
    // the swap is not a valid bijection family for the identity pair
    let o = run(
        &[
            "cat",
            "adjunction",
            "--source",
            &data("parallel.cat"),
            "--target",
            &data("parallel.cat"),
            "--left",
            &data("identity.functor"),
            "--right",
            &data("swap.functor"),
            "--phi",
            &data("identity.phi"),
        ],
        None,
    );
    assert_eq!(code(&o), 1);
}
