#!/usr/bin/env python3
"""Generate the synthetic stand-in datasets bundled under data/.

The three public datasets used by the evaluation scenarios are not
redistributable here, so the repository ships schema-compatible
synthetic stand-ins instead: same column names, same column types, same
target encoding, and (for the heart-failure table) the same row count
and class balance.  Numbers are drawn from plausible ranges with a mild
signal linking features to the target so trained baselines behave
sensibly.  Regenerate with:  python3 scripts/make_synthetic_data.py

See README.md for how to drop in the real datasets.
"""

from __future__ import annotations

import csv
import random
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows x {len(header)} columns)")


def make_heart(rng: random.Random) -> None:
    """299 rows, 13 columns, 96 positive DEATH_EVENT (32.1% minority)."""
    header = [
        "age", "anaemia", "creatinine_phosphokinase", "diabetes",
        "ejection_fraction", "high_blood_pressure", "platelets",
        "serum_creatinine", "serum_sodium", "sex", "smoking", "time",
        "DEATH_EVENT",
    ]
    rows = []
    outcomes = [1] * 96 + [0] * 203
    rng.shuffle(outcomes)
    for death in outcomes:
        age = min(95, max(40, rng.gauss(66 if death else 58, 11)))
        # heavy-tailed lab values produce natural Tukey outliers
        cpk = int(min(7861, max(23, rng.lognormvariate(5.8, 1.0))))
        ejection = int(min(80, max(
            14, rng.gauss(33 if death else 40, 10))))
        platelets = round(min(850000.0, max(
            25100.0, rng.gauss(263358, 97804))), 2)
        creatinine = round(min(9.4, max(
            0.5, rng.lognormvariate(0.33 if death else 0.05, 0.4))), 1)
        sodium = int(min(148, max(113, rng.gauss(135.6, 4.4))))
        time = int(max(4, min(285, rng.gauss(
            70 if death else 158, 62))))
        rows.append([
            round(age, 0 if age == int(age) else 2), rng.randint(0, 1),
            cpk, rng.randint(0, 1), ejection, rng.randint(0, 1),
            platelets, creatinine, sodium, rng.randint(0, 1),
            rng.randint(0, 1), time, death,
        ])
    write_csv(DATA_DIR / "heart_synthetic.csv", header, rows)


def make_diabetes(rng: random.Random) -> None:
    """5,000-row stand-in for the 100,000-row original (8.5% positive)."""
    header = [
        "gender", "age", "hypertension", "heart_disease",
        "smoking_history", "bmi", "HbA1c_level", "blood_glucose_level",
        "diabetes",
    ]
    genders = ["Female", "Male", "Other"]
    smoking = ["never", "No Info", "current", "former", "ever",
               "not current"]
    n = 5000
    outcomes = [1] * 425 + [0] * (n - 425)
    rng.shuffle(outcomes)
    rows = []
    for diabetic in outcomes:
        age = round(min(80.0, max(0.08, rng.gauss(
            52 if diabetic else 40, 19))), 2)
        bmi = round(min(95.7, max(10.0, rng.gauss(
            31 if diabetic else 27, 6.6))), 2)
        hba1c = round(min(9.0, max(3.5, rng.gauss(
            6.9 if diabetic else 5.4, 0.7))), 1)
        glucose = int(min(300, max(80, rng.gauss(
            195 if diabetic else 135, 35))))
        rows.append([
            rng.choices(genders, weights=[58, 41, 1])[0], age,
            int(rng.random() < (0.25 if diabetic else 0.06)),
            int(rng.random() < (0.15 if diabetic else 0.03)),
            rng.choice(smoking), bmi, hba1c, glucose, diabetic,
        ])
    write_csv(DATA_DIR / "diabetes_synthetic.csv", header, rows)


def make_cars(rng: random.Random) -> None:
    """4,340 rows, 8 columns; selling_price driven by year/km/fuel."""
    header = ["name", "year", "selling_price", "km_driven", "fuel",
              "seller_type", "transmission", "owner"]
    makers = ["Maruti", "Hyundai", "Mahindra", "Tata", "Toyota", "Honda",
              "Ford", "Chevrolet", "Renault", "Volkswagen", "BMW",
              "Skoda", "Nissan", "Jaguar", "Volvo", "Ambassador", "Audi",
              "Fiat", "Jeep", "Datsun"]
    models = ["Swift", "Alto", "i20", "City", "Verna", "XUV500", "Nexon",
              "Innova", "Fortuner", "Polo", "Creta", "Baleno", "Ertiga",
              "Scorpio", "Duster", "Amaze", "Eon", "Safari", "Venue",
              "Kwid", "Celerio", "Brio", "Figo", "EcoSport", "Tiago"]
    variants = ["LXI", "VXI", "ZXI", "VDI", "SX", "EX", "Base", "Delta",
                "Alpha", "Magna", "Sportz", "Asta", "Titanium", "GT"]
    fuels = ["Petrol", "Diesel", "CNG", "LPG", "Electric"]
    sellers = ["Individual", "Dealer", "Trustmark Dealer"]
    owners = ["First Owner", "Second Owner", "Third Owner",
              "Fourth & Above Owner", "Test Drive Car"]
    rows = []
    for _ in range(4340):
        year = rng.randint(1996, 2020)
        km = int(min(806599, max(1000, rng.lognormvariate(11.0, 0.7))))
        fuel = rng.choices(fuels, weights=[48, 48, 2, 1, 1])[0]
        transmission = rng.choices(
            ["Manual", "Automatic"], weights=[88, 12])[0]
        owner = rng.choices(owners, weights=[60, 28, 8, 3, 1])[0]
        base = 28000.0 * (1.13 ** (year - 1996))
        base *= 0.9 ** (km / 100000)
        base *= {"Petrol": 1.0, "Diesel": 1.25, "CNG": 0.9, "LPG": 0.85,
                 "Electric": 1.6}[fuel]
        if transmission == "Automatic":
            base *= 1.8
        price = int(min(8900000, max(
            20000, base * rng.lognormvariate(0, 0.45))))
        name = (f"{rng.choice(makers)} {rng.choice(models)} "
                f"{rng.choice(variants)}")
        rows.append([
            name, year, price, km, fuel,
            rng.choices(sellers, weights=[77, 20, 3])[0],
            transmission, owner,
        ])
    write_csv(DATA_DIR / "cars_synthetic.csv", header, rows)


def main() -> None:
    make_heart(random.Random(2024_01))
    make_diabetes(random.Random(2024_02))
    make_cars(random.Random(2024_03))


if __name__ == "__main__":
    main()
