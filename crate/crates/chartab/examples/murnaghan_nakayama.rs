//! Symmetric-group character values by border-strip recursion: full small
//! tables, the hook length degree oracle, and restrictions of partition
//! characters to the group on 12 points.

use chartab::classfun::ClassFrame;
use chartab::indres::{mn_value, restrict_sym_character, sym_character_table, MnEvaluator, Partition};
use chartab::permgroup::{parse_fixture, GroupData, DEFAULT_CLOSURE_CAP};

fn main() {
    // The full character table of Sym(5), exactly orthogonal.
    let (partitions, table) = sym_character_table(5).expect("table builds");
    println!("Sym(5) character table (rows and columns by partition):");
    print!("{:>12}", "");
    for mu in &partitions {
        print!("{:>10}", mu.to_string());
    }
    println!();
    for (lam, row) in partitions.iter().zip(table.rows.iter()) {
        print!("{:>12}", lam.to_string());
        for v in row.values() {
            print!("{:>10}", v.to_string());
        }
        println!();
    }
    let report = table.verify_orthogonality().expect("verification runs");
    println!("orthogonality: {}\n", report.ok());

    // Degrees agree with the hook length formula on all 77 partitions of 12.
    let mut evaluator = MnEvaluator::new();
    let identity = Partition::new(&[1; 12]);
    let all = Partition::all_of(12);
    let agree = all.iter().all(|lam| {
        evaluator.value(lam, &identity).unwrap().to_string() == lam.hook_degree().to_string()
    });
    println!("hook length formula matches all {} degrees: {agree}", all.len());

    // A single value, as the mn subcommand computes it.
    let v = mn_value(&"9,3".parse().unwrap(), &"2,2,2,2,1,1,1,1".parse().unwrap()).unwrap();
    println!("character 9,3 on the class 2^4 of Sym(12): {v}");

    // Restricting a partition character to the sharply 5-transitive group.
    let (_, gens) = parse_fixture(include_str!("../fixtures/g12.gens")).unwrap();
    let g12 = GroupData::closure(&gens, DEFAULT_CLOSURE_CAP).unwrap();
    let frame = ClassFrame::from_group("G12", &g12);
    let restricted = restrict_sym_character(&"9,1,1,1".parse().unwrap(), &frame).unwrap();
    println!(
        "restriction of 9,1,1,1 to the 12-point group: degree {}, norm {}",
        restricted.degree(),
        restricted.norm().unwrap()
    );
}
