use serde_json::Value;
use weylcode_demo::{code_view_json, plancherel_json, rsk_view_json};

#[test]
fn code_view_shows_code_and_transfer() {
    let v: Value = serde_json::from_str(&code_view_json("0.5 0.2 0.7 0.6").unwrap()).unwrap();
    assert_eq!(v["t"], serde_json::json!([1, 1, 3, 3]));
    assert_eq!(v["ranks"], serde_json::json!([1, 0, 3, 2]));
    assert_eq!(v["transfer"], serde_json::json!([1, 2, 2]));
    assert_eq!(v["special"], serde_json::json!([true, true, false, false]));
    assert_eq!(v["d"], serde_json::json!([1, 2, 2, 2]));
    assert_eq!(v["estimate"], 0.5);
}

#[test]
fn code_view_rejects_bad_input() {
    assert!(code_view_json("0.5, 0.5").is_err());
    assert!(code_view_json("").is_err());
    assert!(code_view_json("0.3 x").is_err());
}

#[test]
fn rsk_view_runs_promotion_down_to_one_cell() {
    let v: Value = serde_json::from_str(&rsk_view_json("0.5,0.2,0.7,0.6").unwrap()).unwrap();
    assert_eq!(v["q"]["rows"], serde_json::json!([[1, 3], [2, 4]]));
    let orbit = v["orbit"].as_array().unwrap();
    assert_eq!(orbit.len(), 4);
    assert_eq!(orbit[3]["rows"], serde_json::json!([[1]]));
    assert_eq!(orbit[1]["rows"], serde_json::json!([[1, 2], [3]]));
    assert_eq!(
        v["paths"][0],
        serde_json::json!([[], [1], [1, 1], [2, 1], [2, 2]])
    );
}

#[test]
fn plancherel_histogram_is_normalized() {
    let bars: Vec<Value> = serde_json::from_str(&plancherel_json(4, 2000, 3).unwrap()).unwrap();
    assert_eq!(bars.len(), 5);
    assert_eq!(bars[0]["shape"], serde_json::json!([4]));
    let total: u64 = bars.iter().map(|b| b["count"].as_u64().unwrap()).sum();
    assert_eq!(total, 2000);
    let p: f64 = bars
        .iter()
        .map(|b| b["probability"].as_f64().unwrap())
        .sum();
    assert!((p - 1.0).abs() < 1e-12);
    assert_eq!(
        plancherel_json(4, 2000, 3).unwrap(),
        plancherel_json(4, 2000, 3).unwrap()
    );
    assert!(plancherel_json(0, 10, 1).is_err());
    assert!(plancherel_json(4, 0, 1).is_err());
}
