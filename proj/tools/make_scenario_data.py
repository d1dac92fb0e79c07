#!/usr/bin/env python3
"""Generate the bundled scenario data files under data/.

Writes countries.csv, regions.csv and the ssp{2,3,5}.csv trajectory files.
Per-country base values are approximate; the 2050/2100 anchors are rescaled so
the global population and GDP-per-capita aggregates hit the scenario targets
exactly. Rerun after editing the country table:

    python3 tools/make_scenario_data.py
"""

import os

# (iso3, name, 2010 population in millions, 2010 GDP/cap PPP-2005 USD)
REGIONS = {
    "Centrally Planned Asia": [
        ("KHM", "Cambodia", 14.3, 2100), ("CHN", "China", 1340.0, 8000),
        ("LAO", "Laos", 6.2, 2500), ("MNG", "Mongolia", 2.7, 6700),
        ("VNM", "Vietnam", 87.0, 4000),
    ],
    "Europe & Former Soviet Union": [
        ("ALB", "Albania", 2.9, 8500), ("ARM", "Armenia", 2.9, 5500),
        ("AUT", "Austria", 8.4, 39000), ("AZE", "Azerbaijan", 9.0, 9000),
        ("BEL", "Belgium", 10.9, 36500), ("BGR", "Bulgaria", 7.4, 12500),
        ("BIH", "Bosnia and Herzegovina", 3.8, 8200), ("BLR", "Belarus", 9.5, 13500),
        ("HRV", "Croatia", 4.3, 18000), ("CYP", "Cyprus", 1.1, 28000),
        ("CZE", "Czech Republic", 10.5, 25000), ("DNK", "Denmark", 5.5, 39000),
        ("EST", "Estonia", 1.3, 20000), ("FIN", "Finland", 5.4, 35500),
        ("FRA", "France", 65.0, 34000), ("GEO", "Georgia", 3.7, 5000),
        ("DEU", "Germany", 81.8, 37000), ("GRC", "Greece", 11.1, 26000),
        ("HUN", "Hungary", 10.0, 19500), ("ISL", "Iceland", 0.32, 37000),
        ("IRL", "Ireland", 4.6, 40000), ("ITA", "Italy", 59.3, 31500),
        ("KAZ", "Kazakhstan", 16.3, 11500), ("XKX", "Kosovo", 1.8, 6500),
        ("KGZ", "Kyrgyzstan", 5.4, 2600), ("LVA", "Latvia", 2.1, 16500),
        ("LTU", "Lithuania", 3.1, 18500), ("LUX", "Luxembourg", 0.51, 78000),
        ("MLT", "Malta", 0.41, 25500), ("MDA", "Moldova", 3.6, 3300),
        ("MNE", "Montenegro", 0.62, 11500), ("NLD", "Netherlands", 16.6, 41000),
        ("NOR", "Norway", 4.9, 56000), ("POL", "Poland", 38.2, 19000),
        ("PRT", "Portugal", 10.6, 24500), ("ROU", "Romania", 20.2, 14500),
        ("RUS", "Russia", 142.8, 19500), ("SRB", "Serbia", 7.3, 10500),
        ("SVK", "Slovakia", 5.4, 22500), ("SVN", "Slovenia", 2.05, 26500),
        ("ESP", "Spain", 46.6, 30500), ("SWE", "Sweden", 9.4, 39000),
        ("CHE", "Switzerland", 7.8, 46500), ("TJK", "Tajikistan", 7.6, 2100),
        ("TUR", "Turkey", 72.3, 15500), ("TKM", "Turkmenistan", 5.0, 9500),
        ("MKD", "North Macedonia", 2.1, 10500), ("UKR", "Ukraine", 45.9, 7300),
        ("GBR", "United Kingdom", 62.7, 35500), ("UZB", "Uzbekistan", 28.5, 3900),
    ],
    "Latin America": [
        ("ARG", "Argentina", 40.8, 15500), ("BHS", "Bahamas", 0.36, 27500),
        ("BLZ", "Belize", 0.31, 7800), ("BOL", "Bolivia", 10.0, 4900),
        ("BRA", "Brazil", 195.0, 13000), ("BRB", "Barbados", 0.28, 14500),
        ("CHL", "Chile", 17.1, 18500), ("COL", "Colombia", 46.4, 9800),
        ("CRI", "Costa Rica", 4.6, 12000), ("CUB", "Cuba", 11.3, 18000),
        ("DOM", "Dominican Republic", 9.9, 9800), ("ECU", "Ecuador", 15.0, 8800),
        ("SLV", "El Salvador", 6.2, 6700), ("GTM", "Guatemala", 14.7, 6300),
        ("GUY", "Guyana", 0.75, 5400), ("HND", "Honduras", 7.6, 3900),
        ("HTI", "Haiti", 10.0, 1500), ("JAM", "Jamaica", 2.7, 7700),
        ("MEX", "Mexico", 114.0, 14500), ("NIC", "Nicaragua", 5.8, 4000),
        ("PAN", "Panama", 3.6, 13500), ("PER", "Peru", 29.4, 9200),
        ("PRY", "Paraguay", 6.5, 6800), ("SUR", "Suriname", 0.52, 12500),
        ("TTO", "Trinidad and Tobago", 1.3, 26500), ("URY", "Uruguay", 3.4, 14500),
        ("VEN", "Venezuela", 29.0, 15500),
    ],
    "Sub-Saharan Africa": [
        ("AGO", "Angola", 19.5, 5600), ("BEN", "Benin", 9.5, 1600),
        ("BWA", "Botswana", 2.0, 13000), ("BFA", "Burkina Faso", 15.5, 1300),
        ("BDI", "Burundi", 8.7, 700), ("CMR", "Cameroon", 20.0, 2400),
        ("CPV", "Cape Verde", 0.49, 5500), ("CAF", "Central African Republic", 4.4, 800),
        ("TCD", "Chad", 11.7, 1900), ("COM", "Comoros", 0.7, 1300),
        ("COG", "Congo", 4.1, 4500), ("CIV", "Cote d'Ivoire", 20.1, 2600),
        ("COD", "Democratic Republic of the Congo", 64.5, 600),
        ("DJI", "Djibouti", 0.83, 2600), ("ERI", "Eritrea", 5.7, 1100),
        ("ETH", "Ethiopia", 87.6, 1100), ("GAB", "Gabon", 1.6, 14500),
        ("GMB", "Gambia", 1.7, 1500), ("GHA", "Ghana", 24.3, 3000),
        ("GIN", "Guinea", 10.9, 1100), ("GNB", "Guinea-Bissau", 1.6, 1200),
        ("GNQ", "Equatorial Guinea", 0.7, 30000), ("KEN", "Kenya", 40.9, 2300),
        ("LSO", "Lesotho", 2.0, 1900), ("LBR", "Liberia", 3.9, 700),
        ("MDG", "Madagascar", 21.1, 1300), ("MWI", "Malawi", 14.8, 900),
        ("MLI", "Mali", 15.2, 1600), ("MRT", "Mauritania", 3.6, 3000),
        ("MUS", "Mauritius", 1.25, 13500), ("MOZ", "Mozambique", 23.5, 900),
        ("NAM", "Namibia", 2.2, 7900), ("NER", "Niger", 16.5, 800),
        ("NGA", "Nigeria", 159.0, 4500), ("RWA", "Rwanda", 10.8, 1300),
        ("SEN", "Senegal", 12.9, 2100), ("SLE", "Sierra Leone", 5.8, 1100),
        ("SOM", "Somalia", 9.6, 600), ("ZAF", "South Africa", 51.2, 11000),
        ("SWZ", "Eswatini", 1.2, 6500), ("TGO", "Togo", 6.4, 1200),
        ("UGA", "Uganda", 33.1, 1500), ("TZA", "Tanzania", 44.8, 1900),
        ("ESH", "Western Sahara", 0.53, 2500), ("ZMB", "Zambia", 13.6, 2900),
        ("ZWE", "Zimbabwe", 13.1, 1700),
    ],
    "North America": [
        ("CAN", "Canada", 34.1, 38500), ("PRI", "Puerto Rico", 3.7, 28000),
        ("USA", "United States", 309.0, 46500),
    ],
    "Oceania & Pacific Asia": [
        ("AUS", "Australia", 22.0, 39500), ("BRN", "Brunei Darussalam", 0.4, 67000),
        ("FJI", "Fiji", 0.86, 7200), ("PYF", "French Polynesia", 0.27, 18000),
        ("IDN", "Indonesia", 240.0, 7800), ("JPN", "Japan", 128.0, 32500),
        ("KOR", "Republic of Korea", 49.4, 28500), ("MYS", "Malaysia", 28.2, 18500),
        ("MMR", "Myanmar", 51.9, 2800), ("NCL", "New Caledonia", 0.25, 30000),
        ("NZL", "New Zealand", 4.4, 29500), ("PNG", "Papua New Guinea", 6.9, 2400),
        ("PHL", "Philippines", 93.4, 5300), ("SGP", "Singapore", 5.1, 60000),
        ("SLB", "Solomon Islands", 0.53, 1900), ("TWN", "Taiwan", 23.1, 33000),
        ("THA", "Thailand", 66.4, 12000), ("TLS", "Timor-Leste", 1.1, 2000),
        ("WSM", "Samoa", 0.19, 5200),
    ],
    "Middle East & North Africa": [
        ("DZA", "Algeria", 36.0, 11500), ("BHR", "Bahrain", 1.25, 38000),
        ("EGY", "Egypt", 82.0, 9400), ("IRN", "Iran", 74.6, 15500),
        ("IRQ", "Iraq", 31.0, 11500), ("JOR", "Jordan", 6.5, 9500),
        ("ISR", "Israel", 7.6, 27500), ("KWT", "Kuwait", 3.0, 70000),
        ("LBN", "Lebanon", 4.3, 13500), ("LBY", "Libya", 6.3, 23500),
        ("MAR", "Morocco", 32.0, 5900), ("OMN", "Oman", 2.9, 40000),
        ("PSE", "Palestine", 4.0, 3900), ("QAT", "Qatar", 1.8, 110000),
        ("SAU", "Saudi Arabia", 27.4, 42000), ("SSD", "South Sudan", 10.0, 1600),
        ("SDN", "Sudan", 34.4, 3200), ("SYR", "Syria", 21.0, 4600),
        ("TUN", "Tunisia", 10.5, 9400), ("ARE", "United Arab Emirates", 8.3, 55000),
        ("YEM", "Yemen", 23.6, 3600),
    ],
    "South Asia": [
        ("AFG", "Afghanistan", 28.2, 1500), ("BGD", "Bangladesh", 148.0, 2300),
        ("BTN", "Bhutan", 0.72, 5600), ("IND", "India", 1231.0, 4200),
        ("MDV", "Maldives", 0.33, 9900), ("NPL", "Nepal", 26.9, 1800),
        ("PAK", "Pakistan", 173.0, 4000), ("LKA", "Sri Lanka", 20.7, 7800),
    ],
}

# Regional population growth patterns: multiplier vs 2010, later rescaled so
# the global total matches the scenario target.
POP_PATTERN = {
    "Sub-Saharan Africa": (2.00, 3.00),
    "South Asia": (1.35, 1.20),
    "Middle East & North Africa": (1.50, 1.60),
    "Latin America": (1.25, 1.10),
    "North America": (1.20, 1.30),
    "Oceania & Pacific Asia": (1.05, 0.90),
    "Europe & Former Soviet Union": (0.95, 0.85),
    "Centrally Planned Asia": (0.95, 0.70),
}

HOUSEHOLD_2010 = {
    "Sub-Saharan Africa": 5.0,
    "South Asia": 4.6,
    "Middle East & North Africa": 5.0,
    "Latin America": 3.8,
    "Centrally Planned Asia": 3.2,
    "Oceania & Pacific Asia": 3.0,
    "North America": 2.6,
    "Europe & Former Soviet Union": 2.4,
}

# scenario -> (pop billions 2050 / 2100, GDP/cap 2050 / 2100, growth spread,
# income convergence at 2050 / 2100)
SCENARIOS = {
    "ssp2": ((9.1, 9.0), (25100, 59600), 1.0, (0.25, 0.45)),
    "ssp3": ((10.0, 12.7), (17800, 21900), 1.5, (0.10, 0.20)),
    "ssp5": ((8.5, 7.4), (42200, 137700), 0.7, (0.35, 0.60)),
}


def flat_countries():
    for region, rows in REGIONS.items():
        for iso, name, pop_m, gdp in rows:
            yield region, iso, name, pop_m * 1e6, gdp


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "data")
    os.makedirs(out_dir, exist_ok=True)

    rows = sorted(flat_countries(), key=lambda r: r[1])

    with open(os.path.join(out_dir, "countries.csv"), "w") as f:
        f.write("country,name,population_2010\n")
        for region, iso, name, pop, gdp in rows:
            f.write(f"{iso},{name},{pop:.0f}\n")

    with open(os.path.join(out_dir, "regions.csv"), "w") as f:
        f.write("country,region\n")
        for region, iso, name, pop, gdp in rows:
            f.write(f"{iso},{region}\n")

    pop_2010 = sum(r[3] for r in rows)
    print(f"2010 global population: {pop_2010/1e9:.2f} B")

    for scen, ((p50, p100), (g50, g100), spread, (c50, c100)) in SCENARIOS.items():
        # Raw per-country multipliers, then rescale to the global target.
        raw = {}
        for region, iso, name, pop, gdp in rows:
            m50, m100 = POP_PATTERN[region]
            raw[iso] = (1.0 + (m50 - 1.0) * spread, 1.0 + (m100 - 1.0) * spread)
        s50 = p50 * 1e9 / sum(pop * raw[iso][0] for _, iso, _, pop, _ in rows)
        s100 = p100 * 1e9 / sum(pop * raw[iso][1] for _, iso, _, pop, _ in rows)

        # Income convergence toward the global mean, then a uniform scale so
        # the population-weighted global GDP/cap equals the target.
        gmean = sum(pop * gdp for _, _, _, pop, gdp in rows) / pop_2010

        def converged(gdp, conv):
            return gdp * (gmean / gdp) ** conv

        w50 = sum(pop * raw[iso][0] * s50 * converged(gdp, c50)
                  for _, iso, _, pop, gdp in rows)
        w100 = sum(pop * raw[iso][1] * s100 * converged(gdp, c100)
                   for _, iso, _, pop, gdp in rows)
        k50 = g50 * p50 * 1e9 / w50
        k100 = g100 * p100 * 1e9 / w100

        with open(os.path.join(out_dir, f"{scen}.csv"), "w") as f:
            f.write("country,year,gdp_per_cap,pop_multiplier,household_size\n")
            for region, iso, name, pop, gdp in rows:
                hh10 = HOUSEHOLD_2010[region]
                hh50 = hh10 * 0.90
                hh100 = hh10 * 0.75
                f.write(f"{iso},2010,{gdp:.2f},1.0,{hh10:.3f}\n")
                f.write(f"{iso},2050,{converged(gdp, c50) * k50:.2f},"
                        f"{raw[iso][0] * s50:.6f},{hh50:.3f}\n")
                f.write(f"{iso},2100,{converged(gdp, c100) * k100:.2f},"
                        f"{raw[iso][1] * s100:.6f},{hh100:.3f}\n")

        chk50 = sum(pop * raw[iso][0] * s50 for _, iso, _, pop, _ in rows) / 1e9
        chk100 = sum(pop * raw[iso][1] * s100 for _, iso, _, pop, _ in rows) / 1e9
        print(f"{scen}: pop {chk50:.2f}/{chk100:.2f} B, "
              f"gdp {g50}/{g100} (calibrated)")


if __name__ == "__main__":
    main()
