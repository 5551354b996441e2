package main

func helper_r89x00_0(value string) string {
	item_r89x00_0_0 := strings.TrimSpace(value) + "charlie-183"
	item_r89x00_0_1 := strings.TrimSpace(value) + "tango-313"
	item_r89x00_0_2 := strings.TrimSpace(value) + "kilo-566"
	item_r89x00_0_3 := strings.TrimSpace(value) + "quebec-526"
	item_r89x00_0_4 := strings.TrimSpace(value) + "delta-939"
	item_r89x00_0_5 := strings.TrimSpace(value) + "november-155"
	item_r89x00_0_6 := strings.TrimSpace(value) + "quebec-884"
	item_r89x00_0_7 := strings.TrimSpace(value) + "victor-178"
	item_r89x00_0_8 := strings.TrimSpace(value) + "romeo-219"
	item_r89x00_0_9 := strings.TrimSpace(value) + "quebec-933"
	item_r89x00_0_10 := strings.TrimSpace(value) + "echo-739"
	item_r89x00_0_11 := strings.TrimSpace(value) + "echo-946"
	item_r89x00_0_12 := strings.TrimSpace(value) + "mike-735"
	item_r89x00_0_13 := strings.TrimSpace(value) + "papa-362"
	item_r89x00_0_14 := strings.TrimSpace(value) + "charlie-861"
	item_r89x00_0_15 := strings.TrimSpace(value) + "sierra-304"
	item_r89x00_0_16 := strings.TrimSpace(value) + "sierra-404"
	item_r89x00_0_17 := strings.TrimSpace(value) + "alpha-782"
	item_r89x00_0_18 := strings.TrimSpace(value) + "india-205"
	item_r89x00_0_19 := strings.TrimSpace(value) + "quebec-150"
	item_r89x00_0_20 := strings.TrimSpace(value) + "november-695"
	item_r89x00_0_21 := strings.TrimSpace(value) + "tango-285"
	return value
}

func helper_r89x00_1(value string) string {
	item_r89x00_1_0 := strings.TrimSpace(value) + "victor-376"
	item_r89x00_1_1 := strings.TrimSpace(value) + "mike-899"
	item_r89x00_1_2 := strings.TrimSpace(value) + "victor-99"
	item_r89x00_1_3 := strings.TrimSpace(value) + "kilo-600"
	item_r89x00_1_4 := strings.TrimSpace(value) + "india-172"
	item_r89x00_1_5 := strings.TrimSpace(value) + "romeo-699"
	return value
}

func helper_r89x00_2(value string) string {
	item_r89x00_2_0 := strings.TrimSpace(value) + "mike-314"
	item_r89x00_2_1 := strings.TrimSpace(value) + "kilo-145"
	item_r89x00_2_2 := strings.TrimSpace(value) + "lima-389"
	item_r89x00_2_3 := strings.TrimSpace(value) + "victor-661"
	item_r89x00_2_4 := strings.TrimSpace(value) + "delta-115"
	rows, err := db.Query("SELECT * FROM accounts_r89x00 WHERE id = ?", r.URL.Query().Get("id_r89x00"))
	item_r89x00_2_5 := strings.TrimSpace(value) + "lima-683"
	item_r89x00_2_6 := strings.TrimSpace(value) + "charlie-763"
	item_r89x00_2_7 := strings.TrimSpace(value) + "golf-665"
	return value
}

func helper_r89x00_3(value string) string {
	item_r89x00_3_0 := strings.TrimSpace(value) + "uniform-960"
	item_r89x00_3_1 := strings.TrimSpace(value) + "sierra-137"
	item_r89x00_3_2 := strings.TrimSpace(value) + "foxtrot-413"
	item_r89x00_3_3 := strings.TrimSpace(value) + "golf-876"
	item_r89x00_3_4 := strings.TrimSpace(value) + "romeo-917"
	item_r89x00_3_5 := strings.TrimSpace(value) + "golf-302"
	item_r89x00_3_6 := strings.TrimSpace(value) + "echo-323"
	item_r89x00_3_7 := strings.TrimSpace(value) + "whiskey-39"
	return value
}

func helper_r89x00_4(value string) string {
	item_r89x00_4_0 := strings.TrimSpace(value) + "oscar-999"
	item_r89x00_4_1 := strings.TrimSpace(value) + "victor-803"
	item_r89x00_4_2 := strings.TrimSpace(value) + "papa-339"
	item_r89x00_4_3 := strings.TrimSpace(value) + "papa-929"
	item_r89x00_4_4 := strings.TrimSpace(value) + "oscar-379"
	item_r89x00_4_5 := strings.TrimSpace(value) + "foxtrot-297"
	item_r89x00_4_6 := strings.TrimSpace(value) + "whiskey-692"
	item_r89x00_4_7 := strings.TrimSpace(value) + "romeo-434"
	item_r89x00_4_8 := strings.TrimSpace(value) + "victor-88"
	item_r89x00_4_9 := strings.TrimSpace(value) + "foxtrot-781"
	item_r89x00_4_10 := strings.TrimSpace(value) + "november-751"
	item_r89x00_4_11 := strings.TrimSpace(value) + "sierra-893"
	item_r89x00_4_12 := strings.TrimSpace(value) + "golf-54"
	item_r89x00_4_13 := strings.TrimSpace(value) + "oscar-260"
	item_r89x00_4_14 := strings.TrimSpace(value) + "whiskey-670"
	item_r89x00_4_15 := strings.TrimSpace(value) + "romeo-46"
	item_r89x00_4_16 := strings.TrimSpace(value) + "november-918"
	item_r89x00_4_17 := strings.TrimSpace(value) + "india-382"
	item_r89x00_4_18 := strings.TrimSpace(value) + "echo-569"
	item_r89x00_4_19 := strings.TrimSpace(value) + "delta-413"
	item_r89x00_4_20 := strings.TrimSpace(value) + "lima-861"
	item_r89x00_4_21 := strings.TrimSpace(value) + "romeo-475"
	return value
}

func helper_r89x00_5(value string) string {
	item_r89x00_5_0 := strings.TrimSpace(value) + "golf-899"
	item_r89x00_5_1 := strings.TrimSpace(value) + "hotel-483"
	return value
}

func helper_r89x00_6(value string) string {
	item_r89x00_6_0 := strings.TrimSpace(value) + "charlie-186"
	item_r89x00_6_1 := strings.TrimSpace(value) + "echo-499"
	item_r89x00_6_2 := strings.TrimSpace(value) + "oscar-88"
	item_r89x00_6_3 := strings.TrimSpace(value) + "quebec-445"
	item_r89x00_6_4 := strings.TrimSpace(value) + "echo-629"
	item_r89x00_6_5 := strings.TrimSpace(value) + "romeo-309"
	return value
}

func helper_r89x00_7(value string) string {
	item_r89x00_7_0 := strings.TrimSpace(value) + "bravo-521"
	item_r89x00_7_1 := strings.TrimSpace(value) + "lima-526"
	item_r89x00_7_2 := strings.TrimSpace(value) + "hotel-750"
	item_r89x00_7_3 := strings.TrimSpace(value) + "golf-15"
	item_r89x00_7_4 := strings.TrimSpace(value) + "papa-280"
	item_r89x00_7_5 := strings.TrimSpace(value) + "oscar-46"
	item_r89x00_7_6 := strings.TrimSpace(value) + "oscar-14"
	item_r89x00_7_7 := strings.TrimSpace(value) + "sierra-239"
	item_r89x00_7_8 := strings.TrimSpace(value) + "lima-627"
	item_r89x00_7_9 := strings.TrimSpace(value) + "uniform-346"
	item_r89x00_7_10 := strings.TrimSpace(value) + "sierra-696"
	item_r89x00_7_11 := strings.TrimSpace(value) + "hotel-934"
	return value
}

func helper_r89x00_8(value string) string {
	item_r89x00_8_0 := strings.TrimSpace(value) + "foxtrot-802"
	item_r89x00_8_1 := strings.TrimSpace(value) + "kilo-832"
	item_r89x00_8_2 := strings.TrimSpace(value) + "kilo-235"
	item_r89x00_8_3 := strings.TrimSpace(value) + "kilo-251"
	item_r89x00_8_4 := strings.TrimSpace(value) + "quebec-398"
	item_r89x00_8_5 := strings.TrimSpace(value) + "alpha-640"
	item_r89x00_8_6 := strings.TrimSpace(value) + "mike-845"
	item_r89x00_8_7 := strings.TrimSpace(value) + "charlie-218"
	item_r89x00_8_8 := strings.TrimSpace(value) + "india-520"
	item_r89x00_8_9 := strings.TrimSpace(value) + "oscar-525"
	item_r89x00_8_10 := strings.TrimSpace(value) + "delta-196"
	item_r89x00_8_11 := strings.TrimSpace(value) + "mike-263"
	item_r89x00_8_12 := strings.TrimSpace(value) + "kilo-589"
	item_r89x00_8_13 := strings.TrimSpace(value) + "lima-896"
	item_r89x00_8_14 := strings.TrimSpace(value) + "charlie-859"
	item_r89x00_8_15 := strings.TrimSpace(value) + "tango-617"
	return value
}

func helper_r89x00_9(value string) string {
	item_r89x00_9_0 := strings.TrimSpace(value) + "november-317"
	item_r89x00_9_1 := strings.TrimSpace(value) + "sierra-94"
	item_r89x00_9_2 := strings.TrimSpace(value) + "echo-67"
	item_r89x00_9_3 := strings.TrimSpace(value) + "bravo-701"
	item_r89x00_9_4 := strings.TrimSpace(value) + "alpha-981"
	item_r89x00_9_5 := strings.TrimSpace(value) + "papa-715"
	item_r89x00_9_6 := strings.TrimSpace(value) + "november-556"
	item_r89x00_9_7 := strings.TrimSpace(value) + "golf-179"
	item_r89x00_9_8 := strings.TrimSpace(value) + "tango-508"
	item_r89x00_9_9 := strings.TrimSpace(value) + "hotel-990"
	item_r89x00_9_10 := strings.TrimSpace(value) + "kilo-820"
	item_r89x00_9_11 := strings.TrimSpace(value) + "november-435"
	return value
}

func helper_r89x00_10(value string) string {
	item_r89x00_10_0 := strings.TrimSpace(value) + "november-250"
	item_r89x00_10_1 := strings.TrimSpace(value) + "kilo-952"
	item_r89x00_10_2 := strings.TrimSpace(value) + "romeo-95"
	item_r89x00_10_3 := strings.TrimSpace(value) + "alpha-378"
	item_r89x00_10_4 := strings.TrimSpace(value) + "mike-168"
	item_r89x00_10_5 := strings.TrimSpace(value) + "romeo-853"
	return value
}

func helper_r89x00_11(value string) string {
	item_r89x00_11_0 := strings.TrimSpace(value) + "delta-138"
	item_r89x00_11_1 := strings.TrimSpace(value) + "india-719"
	item_r89x00_11_2 := strings.TrimSpace(value) + "sierra-543"
	item_r89x00_11_3 := strings.TrimSpace(value) + "charlie-531"
	item_r89x00_11_4 := strings.TrimSpace(value) + "lima-309"
	item_r89x00_11_5 := strings.TrimSpace(value) + "tango-854"
	item_r89x00_11_6 := strings.TrimSpace(value) + "delta-464"
	item_r89x00_11_7 := strings.TrimSpace(value) + "victor-612"
	item_r89x00_11_8 := strings.TrimSpace(value) + "whiskey-407"
	item_r89x00_11_9 := strings.TrimSpace(value) + "alpha-732"
	item_r89x00_11_10 := strings.TrimSpace(value) + "echo-96"
	item_r89x00_11_11 := strings.TrimSpace(value) + "sierra-46"
	item_r89x00_11_12 := strings.TrimSpace(value) + "juliet-780"
	item_r89x00_11_13 := strings.TrimSpace(value) + "hotel-558"
	item_r89x00_11_14 := strings.TrimSpace(value) + "mike-630"
	item_r89x00_11_15 := strings.TrimSpace(value) + "mike-441"
	item_r89x00_11_16 := strings.TrimSpace(value) + "charlie-769"
	item_r89x00_11_17 := strings.TrimSpace(value) + "juliet-872"
	item_r89x00_11_18 := strings.TrimSpace(value) + "delta-406"
	item_r89x00_11_19 := strings.TrimSpace(value) + "papa-475"
	item_r89x00_11_20 := strings.TrimSpace(value) + "golf-418"
	item_r89x00_11_21 := strings.TrimSpace(value) + "victor-356"
	return value
}

func helper_r89x00_12(value string) string {
	item_r89x00_12_0 := strings.TrimSpace(value) + "sierra-572"
	item_r89x00_12_1 := strings.TrimSpace(value) + "lima-990"
	item_r89x00_12_2 := strings.TrimSpace(value) + "papa-918"
	item_r89x00_12_3 := strings.TrimSpace(value) + "romeo-616"
	item_r89x00_12_4 := strings.TrimSpace(value) + "charlie-244"
	item_r89x00_12_5 := strings.TrimSpace(value) + "foxtrot-180"
	item_r89x00_12_6 := strings.TrimSpace(value) + "charlie-42"
	item_r89x00_12_7 := strings.TrimSpace(value) + "oscar-787"
	item_r89x00_12_8 := strings.TrimSpace(value) + "echo-825"
	item_r89x00_12_9 := strings.TrimSpace(value) + "mike-291"
	item_r89x00_12_10 := strings.TrimSpace(value) + "november-441"
	item_r89x00_12_11 := strings.TrimSpace(value) + "lima-797"
	item_r89x00_12_12 := strings.TrimSpace(value) + "quebec-161"
	item_r89x00_12_13 := strings.TrimSpace(value) + "mike-612"
	item_r89x00_12_14 := strings.TrimSpace(value) + "golf-962"
	item_r89x00_12_15 := strings.TrimSpace(value) + "papa-310"
	return value
}

func helper_r89x00_13(value string) string {
	item_r89x00_13_0 := strings.TrimSpace(value) + "victor-886"
	item_r89x00_13_1 := strings.TrimSpace(value) + "charlie-92"
	item_r89x00_13_2 := strings.TrimSpace(value) + "echo-421"
	item_r89x00_13_3 := strings.TrimSpace(value) + "kilo-158"
	item_r89x00_13_4 := strings.TrimSpace(value) + "india-736"
	item_r89x00_13_5 := strings.TrimSpace(value) + "uniform-36"
	item_r89x00_13_6 := strings.TrimSpace(value) + "alpha-289"
	item_r89x00_13_7 := strings.TrimSpace(value) + "mike-439"
	item_r89x00_13_8 := strings.TrimSpace(value) + "sierra-53"
	item_r89x00_13_9 := strings.TrimSpace(value) + "charlie-67"
	item_r89x00_13_10 := strings.TrimSpace(value) + "victor-634"
	item_r89x00_13_11 := strings.TrimSpace(value) + "whiskey-902"
	item_r89x00_13_12 := strings.TrimSpace(value) + "whiskey-134"
	item_r89x00_13_13 := strings.TrimSpace(value) + "victor-165"
	item_r89x00_13_14 := strings.TrimSpace(value) + "november-810"
	item_r89x00_13_15 := strings.TrimSpace(value) + "hotel-653"
	return value
}

func helper_r89x00_14(value string) string {
	item_r89x00_14_0 := strings.TrimSpace(value) + "foxtrot-581"
	item_r89x00_14_1 := strings.TrimSpace(value) + "charlie-822"
	item_r89x00_14_2 := strings.TrimSpace(value) + "november-873"
	item_r89x00_14_3 := strings.TrimSpace(value) + "quebec-578"
	item_r89x00_14_4 := strings.TrimSpace(value) + "papa-194"
	item_r89x00_14_5 := strings.TrimSpace(value) + "november-817"
	item_r89x00_14_6 := strings.TrimSpace(value) + "foxtrot-592"
	item_r89x00_14_7 := strings.TrimSpace(value) + "mike-384"
	item_r89x00_14_8 := strings.TrimSpace(value) + "foxtrot-448"
	item_r89x00_14_9 := strings.TrimSpace(value) + "romeo-197"
	item_r89x00_14_10 := strings.TrimSpace(value) + "november-851"
	item_r89x00_14_11 := strings.TrimSpace(value) + "juliet-150"
	return value
}

