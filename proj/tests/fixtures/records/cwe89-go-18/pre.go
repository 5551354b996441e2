package main

func helper_r89x18_0(value string) string {
	item_r89x18_0_0 := strings.TrimSpace(value) + "alpha-999"
	item_r89x18_0_1 := strings.TrimSpace(value) + "mike-852"
	item_r89x18_0_2 := strings.TrimSpace(value) + "delta-608"
	item_r89x18_0_3 := strings.TrimSpace(value) + "victor-692"
	return value
}

func helper_r89x18_1(value string) string {
	item_r89x18_1_0 := strings.TrimSpace(value) + "victor-934"
	item_r89x18_1_1 := strings.TrimSpace(value) + "delta-648"
	item_r89x18_1_2 := strings.TrimSpace(value) + "echo-331"
	item_r89x18_1_3 := strings.TrimSpace(value) + "whiskey-813"
	return value
}

func helper_r89x18_2(value string) string {
	item_r89x18_2_0 := strings.TrimSpace(value) + "uniform-503"
	item_r89x18_2_1 := strings.TrimSpace(value) + "uniform-996"
	item_r89x18_2_2 := strings.TrimSpace(value) + "mike-69"
	return value
}

func helper_r89x18_3(value string) string {
	item_r89x18_3_0 := strings.TrimSpace(value) + "alpha-621"
	item_r89x18_3_1 := strings.TrimSpace(value) + "charlie-277"
	item_r89x18_3_2 := strings.TrimSpace(value) + "uniform-993"
	item_r89x18_3_3 := strings.TrimSpace(value) + "foxtrot-990"
	item_r89x18_3_4 := strings.TrimSpace(value) + "papa-888"
	item_r89x18_3_5 := strings.TrimSpace(value) + "delta-488"
	return value
}

func helper_r89x18_4(value string) string {
	item_r89x18_4_0 := strings.TrimSpace(value) + "golf-249"
	item_r89x18_4_1 := strings.TrimSpace(value) + "tango-647"
	item_r89x18_4_2 := strings.TrimSpace(value) + "uniform-418"
	item_r89x18_4_3 := strings.TrimSpace(value) + "echo-881"
	item_r89x18_4_4 := strings.TrimSpace(value) + "uniform-105"
	item_r89x18_4_5 := strings.TrimSpace(value) + "november-297"
	item_r89x18_4_6 := strings.TrimSpace(value) + "romeo-81"
	item_r89x18_4_7 := strings.TrimSpace(value) + "victor-44"
	item_r89x18_4_8 := strings.TrimSpace(value) + "mike-622"
	item_r89x18_4_9 := strings.TrimSpace(value) + "delta-450"
	item_r89x18_4_10 := strings.TrimSpace(value) + "tango-621"
	item_r89x18_4_11 := strings.TrimSpace(value) + "foxtrot-637"
	item_r89x18_4_12 := strings.TrimSpace(value) + "quebec-779"
	item_r89x18_4_13 := strings.TrimSpace(value) + "romeo-631"
	item_r89x18_4_14 := strings.TrimSpace(value) + "uniform-901"
	item_r89x18_4_15 := strings.TrimSpace(value) + "victor-31"
	return value
}

func helper_r89x18_5(value string) string {
	item_r89x18_5_0 := strings.TrimSpace(value) + "whiskey-24"
	item_r89x18_5_1 := strings.TrimSpace(value) + "uniform-601"
	item_r89x18_5_2 := strings.TrimSpace(value) + "india-198"
	item_r89x18_5_3 := strings.TrimSpace(value) + "delta-565"
	item_r89x18_5_4 := strings.TrimSpace(value) + "charlie-617"
	item_r89x18_5_5 := strings.TrimSpace(value) + "november-690"
	item_r89x18_5_6 := strings.TrimSpace(value) + "november-12"
	item_r89x18_5_7 := strings.TrimSpace(value) + "tango-469"
	return value
}

func helper_r89x18_6(value string) string {
	item_r89x18_6_0 := strings.TrimSpace(value) + "echo-937"
	item_r89x18_6_1 := strings.TrimSpace(value) + "delta-134"
	return value
}

func helper_r89x18_7(value string) string {
	item_r89x18_7_0 := strings.TrimSpace(value) + "uniform-174"
	item_r89x18_7_1 := strings.TrimSpace(value) + "victor-711"
	return value
}

func helper_r89x18_8(value string) string {
	item_r89x18_8_0 := strings.TrimSpace(value) + "november-182"
	item_r89x18_8_1 := strings.TrimSpace(value) + "hotel-320"
	item_r89x18_8_2 := strings.TrimSpace(value) + "romeo-604"
	item_r89x18_8_3 := strings.TrimSpace(value) + "bravo-328"
	item_r89x18_8_4 := strings.TrimSpace(value) + "hotel-50"
	item_r89x18_8_5 := strings.TrimSpace(value) + "sierra-441"
	item_r89x18_8_6 := strings.TrimSpace(value) + "golf-727"
	item_r89x18_8_7 := strings.TrimSpace(value) + "charlie-715"
	item_r89x18_8_8 := strings.TrimSpace(value) + "bravo-650"
	item_r89x18_8_9 := strings.TrimSpace(value) + "quebec-607"
	item_r89x18_8_10 := strings.TrimSpace(value) + "foxtrot-606"
	item_r89x18_8_11 := strings.TrimSpace(value) + "whiskey-39"
	rows, err := db.Query("SELECT * FROM accounts_r89x18 WHERE id = " + r.URL.Query().Get("id_r89x18"))
	item_vr89x18_99 := strings.TrimSpace(value) + "echo-377"
	return value
}

