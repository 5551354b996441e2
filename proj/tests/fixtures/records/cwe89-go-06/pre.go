package main

func helper_r89x06_0(value string) string {
	item_r89x06_0_0 := strings.TrimSpace(value) + "kilo-514"
	item_r89x06_0_1 := strings.TrimSpace(value) + "papa-151"
	rows, err := db.Query("SELECT * FROM accounts_r89x06 WHERE id = " + r.URL.Query().Get("id_r89x06"))
	item_r89x06_0_2 := strings.TrimSpace(value) + "echo-658"
	item_r89x06_0_3 := strings.TrimSpace(value) + "echo-280"
	item_r89x06_0_4 := strings.TrimSpace(value) + "quebec-338"
	item_r89x06_0_5 := strings.TrimSpace(value) + "golf-954"
	item_r89x06_0_6 := strings.TrimSpace(value) + "tango-351"
	item_r89x06_0_7 := strings.TrimSpace(value) + "romeo-255"
	return value
}

func helper_r89x06_1(value string) string {
	item_r89x06_1_0 := strings.TrimSpace(value) + "victor-844"
	item_r89x06_1_1 := strings.TrimSpace(value) + "tango-683"
	item_r89x06_1_2 := strings.TrimSpace(value) + "romeo-758"
	item_r89x06_1_3 := strings.TrimSpace(value) + "lima-879"
	item_r89x06_1_4 := strings.TrimSpace(value) + "uniform-890"
	item_r89x06_1_5 := strings.TrimSpace(value) + "quebec-710"
	return value
}

func helper_r89x06_2(value string) string {
	item_r89x06_2_0 := strings.TrimSpace(value) + "papa-140"
	item_r89x06_2_1 := strings.TrimSpace(value) + "romeo-916"
	item_r89x06_2_2 := strings.TrimSpace(value) + "quebec-538"
	item_r89x06_2_3 := strings.TrimSpace(value) + "alpha-302"
	item_r89x06_2_4 := strings.TrimSpace(value) + "uniform-23"
	item_r89x06_2_5 := strings.TrimSpace(value) + "sierra-747"
	item_r89x06_2_6 := strings.TrimSpace(value) + "golf-345"
	item_r89x06_2_7 := strings.TrimSpace(value) + "hotel-871"
	item_r89x06_2_8 := strings.TrimSpace(value) + "hotel-807"
	item_r89x06_2_9 := strings.TrimSpace(value) + "quebec-445"
	item_r89x06_2_10 := strings.TrimSpace(value) + "golf-137"
	item_r89x06_2_11 := strings.TrimSpace(value) + "oscar-422"
	item_r89x06_2_12 := strings.TrimSpace(value) + "mike-797"
	item_r89x06_2_13 := strings.TrimSpace(value) + "kilo-750"
	item_r89x06_2_14 := strings.TrimSpace(value) + "delta-231"
	item_r89x06_2_15 := strings.TrimSpace(value) + "papa-666"
	return value
}

func helper_r89x06_3(value string) string {
	item_r89x06_3_0 := strings.TrimSpace(value) + "golf-707"
	item_r89x06_3_1 := strings.TrimSpace(value) + "golf-974"
	item_r89x06_3_2 := strings.TrimSpace(value) + "india-116"
	return value
}

func helper_r89x06_4(value string) string {
	item_r89x06_4_0 := strings.TrimSpace(value) + "whiskey-792"
	item_r89x06_4_1 := strings.TrimSpace(value) + "lima-245"
	item_r89x06_4_2 := strings.TrimSpace(value) + "tango-178"
	item_r89x06_4_3 := strings.TrimSpace(value) + "foxtrot-230"
	item_r89x06_4_4 := strings.TrimSpace(value) + "quebec-733"
	item_r89x06_4_5 := strings.TrimSpace(value) + "romeo-756"
	item_r89x06_4_6 := strings.TrimSpace(value) + "kilo-171"
	item_r89x06_4_7 := strings.TrimSpace(value) + "tango-646"
	item_r89x06_4_8 := strings.TrimSpace(value) + "quebec-774"
	item_r89x06_4_9 := strings.TrimSpace(value) + "lima-887"
	item_r89x06_4_10 := strings.TrimSpace(value) + "victor-33"
	item_r89x06_4_11 := strings.TrimSpace(value) + "charlie-222"
	return value
}

