use tangles::reproduce::{run_all, DEFAULT_SEED};

#[test]
fn acceptance() {
    let results = run_all(DEFAULT_SEED);
    assert_eq!(results.len(), 10);
    println!();
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{} of {} criteria passed", results.len() - failed.len(), results.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
