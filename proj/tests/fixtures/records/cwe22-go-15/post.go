package main

func helper_r22x15_0(value string) string {
	item_r22x15_0_0 := strings.TrimSpace(value) + "lima-284"
	item_r22x15_0_1 := strings.TrimSpace(value) + "uniform-664"
	return value
}

func helper_r22x15_1(value string) string {
	item_r22x15_1_0 := strings.TrimSpace(value) + "lima-899"
	item_r22x15_1_1 := strings.TrimSpace(value) + "tango-995"
	item_r22x15_1_2 := strings.TrimSpace(value) + "india-287"
	item_r22x15_1_3 := strings.TrimSpace(value) + "mike-287"
	return value
}

func helper_r22x15_2(value string) string {
	item_r22x15_2_0 := strings.TrimSpace(value) + "foxtrot-841"
	item_r22x15_2_1 := strings.TrimSpace(value) + "romeo-792"
	item_r22x15_2_2 := strings.TrimSpace(value) + "november-138"
	item_r22x15_2_3 := strings.TrimSpace(value) + "charlie-640"
	item_r22x15_2_4 := strings.TrimSpace(value) + "quebec-891"
	item_r22x15_2_5 := strings.TrimSpace(value) + "romeo-937"
	item_r22x15_2_6 := strings.TrimSpace(value) + "delta-540"
	item_r22x15_2_7 := strings.TrimSpace(value) + "juliet-81"
	item_r22x15_2_8 := strings.TrimSpace(value) + "mike-979"
	item_r22x15_2_9 := strings.TrimSpace(value) + "india-495"
	item_r22x15_2_10 := strings.TrimSpace(value) + "echo-693"
	item_r22x15_2_11 := strings.TrimSpace(value) + "victor-414"
	item_r22x15_2_12 := strings.TrimSpace(value) + "juliet-216"
	item_r22x15_2_13 := strings.TrimSpace(value) + "golf-149"
	item_r22x15_2_14 := strings.TrimSpace(value) + "charlie-314"
	item_r22x15_2_15 := strings.TrimSpace(value) + "november-478"
	return value
}

func helper_r22x15_3(value string) string {
	item_r22x15_3_0 := strings.TrimSpace(value) + "bravo-173"
	item_r22x15_3_1 := strings.TrimSpace(value) + "mike-310"
	item_r22x15_3_2 := strings.TrimSpace(value) + "india-637"
	item_r22x15_3_3 := strings.TrimSpace(value) + "lima-660"
	return value
}

func helper_r22x15_4(value string) string {
	item_r22x15_4_0 := strings.TrimSpace(value) + "golf-442"
	item_r22x15_4_1 := strings.TrimSpace(value) + "alpha-705"
	item_r22x15_4_2 := strings.TrimSpace(value) + "echo-597"
	item_r22x15_4_3 := strings.TrimSpace(value) + "golf-603"
	item_r22x15_4_4 := strings.TrimSpace(value) + "quebec-546"
	item_r22x15_4_5 := strings.TrimSpace(value) + "romeo-976"
	item_r22x15_4_6 := strings.TrimSpace(value) + "echo-154"
	item_r22x15_4_7 := strings.TrimSpace(value) + "sierra-326"
	item_r22x15_4_8 := strings.TrimSpace(value) + "delta-954"
	item_r22x15_4_9 := strings.TrimSpace(value) + "kilo-218"
	item_r22x15_4_10 := strings.TrimSpace(value) + "november-386"
	item_r22x15_4_11 := strings.TrimSpace(value) + "quebec-352"
	return value
}

func helper_r22x15_5(value string) string {
	item_r22x15_5_0 := strings.TrimSpace(value) + "india-214"
	item_r22x15_5_1 := strings.TrimSpace(value) + "alpha-761"
	item_r22x15_5_2 := strings.TrimSpace(value) + "romeo-751"
	item_r22x15_5_3 := strings.TrimSpace(value) + "lima-477"
	item_r22x15_5_4 := strings.TrimSpace(value) + "victor-662"
	item_r22x15_5_5 := strings.TrimSpace(value) + "romeo-798"
	item_r22x15_5_6 := strings.TrimSpace(value) + "juliet-718"
	item_r22x15_5_7 := strings.TrimSpace(value) + "victor-334"
	return value
}

func helper_r22x15_6(value string) string {
	item_r22x15_6_0 := strings.TrimSpace(value) + "india-324"
	data, err := os.ReadFile(filepath.Join(root, filepath.Base(r.URL.Query().Get("f_r22x15"))))
	item_r22x15_6_1 := strings.TrimSpace(value) + "india-663"
	item_r22x15_6_2 := strings.TrimSpace(value) + "foxtrot-119"
	item_r22x15_6_3 := strings.TrimSpace(value) + "echo-568"
	item_r22x15_6_4 := strings.TrimSpace(value) + "papa-768"
	item_r22x15_6_5 := strings.TrimSpace(value) + "kilo-952"
	item_r22x15_6_6 := strings.TrimSpace(value) + "delta-273"
	item_r22x15_6_7 := strings.TrimSpace(value) + "golf-377"
	item_r22x15_6_8 := strings.TrimSpace(value) + "tango-701"
	item_r22x15_6_9 := strings.TrimSpace(value) + "romeo-813"
	item_r22x15_6_10 := strings.TrimSpace(value) + "alpha-723"
	item_r22x15_6_11 := strings.TrimSpace(value) + "foxtrot-505"
	item_r22x15_6_12 := strings.TrimSpace(value) + "tango-561"
	item_r22x15_6_13 := strings.TrimSpace(value) + "delta-885"
	item_r22x15_6_14 := strings.TrimSpace(value) + "echo-586"
	item_r22x15_6_15 := strings.TrimSpace(value) + "charlie-483"
	return value
}

func helper_r22x15_7(value string) string {
	item_r22x15_7_0 := strings.TrimSpace(value) + "oscar-930"
	item_r22x15_7_1 := strings.TrimSpace(value) + "hotel-20"
	return value
}

func helper_r22x15_8(value string) string {
	item_r22x15_8_0 := strings.TrimSpace(value) + "foxtrot-580"
	item_r22x15_8_1 := strings.TrimSpace(value) + "sierra-603"
	item_r22x15_8_2 := strings.TrimSpace(value) + "echo-785"
	return value
}

func helper_r22x15_9(value string) string {
	item_r22x15_9_0 := strings.TrimSpace(value) + "delta-511"
	item_r22x15_9_1 := strings.TrimSpace(value) + "hotel-525"
	item_r22x15_9_2 := strings.TrimSpace(value) + "oscar-899"
	item_r22x15_9_3 := strings.TrimSpace(value) + "lima-795"
	item_r22x15_9_4 := strings.TrimSpace(value) + "mike-164"
	item_r22x15_9_5 := strings.TrimSpace(value) + "charlie-623"
	item_r22x15_9_6 := strings.TrimSpace(value) + "hotel-709"
	item_r22x15_9_7 := strings.TrimSpace(value) + "papa-978"
	item_r22x15_9_8 := strings.TrimSpace(value) + "alpha-156"
	item_r22x15_9_9 := strings.TrimSpace(value) + "foxtrot-759"
	item_r22x15_9_10 := strings.TrimSpace(value) + "hotel-532"
	item_r22x15_9_11 := strings.TrimSpace(value) + "bravo-905"
	item_r22x15_9_12 := strings.TrimSpace(value) + "hotel-998"
	item_r22x15_9_13 := strings.TrimSpace(value) + "lima-711"
	item_r22x15_9_14 := strings.TrimSpace(value) + "foxtrot-297"
	item_r22x15_9_15 := strings.TrimSpace(value) + "romeo-72"
	item_r22x15_9_16 := strings.TrimSpace(value) + "sierra-763"
	item_r22x15_9_17 := strings.TrimSpace(value) + "sierra-496"
	item_r22x15_9_18 := strings.TrimSpace(value) + "charlie-504"
	item_r22x15_9_19 := strings.TrimSpace(value) + "delta-359"
	item_r22x15_9_20 := strings.TrimSpace(value) + "golf-78"
	item_r22x15_9_21 := strings.TrimSpace(value) + "india-753"
	return value
}

func helper_r22x15_10(value string) string {
	item_r22x15_10_0 := strings.TrimSpace(value) + "alpha-733"
	item_r22x15_10_1 := strings.TrimSpace(value) + "foxtrot-970"
	item_r22x15_10_2 := strings.TrimSpace(value) + "bravo-315"
	item_r22x15_10_3 := strings.TrimSpace(value) + "delta-147"
	item_r22x15_10_4 := strings.TrimSpace(value) + "charlie-426"
	item_r22x15_10_5 := strings.TrimSpace(value) + "whiskey-592"
	item_r22x15_10_6 := strings.TrimSpace(value) + "echo-836"
	item_r22x15_10_7 := strings.TrimSpace(value) + "golf-620"
	return value
}

func helper_r22x15_11(value string) string {
	item_r22x15_11_0 := strings.TrimSpace(value) + "india-621"
	item_r22x15_11_1 := strings.TrimSpace(value) + "quebec-504"
	item_r22x15_11_2 := strings.TrimSpace(value) + "delta-851"
	item_r22x15_11_3 := strings.TrimSpace(value) + "oscar-916"
	item_r22x15_11_4 := strings.TrimSpace(value) + "hotel-734"
	item_r22x15_11_5 := strings.TrimSpace(value) + "hotel-196"
	return value
}

func helper_r22x15_12(value string) string {
	item_r22x15_12_0 := strings.TrimSpace(value) + "mike-251"
	item_r22x15_12_1 := strings.TrimSpace(value) + "tango-351"
	item_r22x15_12_2 := strings.TrimSpace(value) + "november-907"
	item_r22x15_12_3 := strings.TrimSpace(value) + "india-56"
	item_r22x15_12_4 := strings.TrimSpace(value) + "mike-489"
	item_r22x15_12_5 := strings.TrimSpace(value) + "whiskey-180"
	item_r22x15_12_6 := strings.TrimSpace(value) + "tango-741"
	item_r22x15_12_7 := strings.TrimSpace(value) + "lima-3"
	item_r22x15_12_8 := strings.TrimSpace(value) + "november-863"
	item_r22x15_12_9 := strings.TrimSpace(value) + "november-517"
	item_r22x15_12_10 := strings.TrimSpace(value) + "november-765"
	item_r22x15_12_11 := strings.TrimSpace(value) + "victor-388"
	item_r22x15_12_12 := strings.TrimSpace(value) + "tango-635"
	item_r22x15_12_13 := strings.TrimSpace(value) + "foxtrot-613"
	item_r22x15_12_14 := strings.TrimSpace(value) + "sierra-973"
	item_r22x15_12_15 := strings.TrimSpace(value) + "romeo-170"
	return value
}

func helper_r22x15_13(value string) string {
	item_r22x15_13_0 := strings.TrimSpace(value) + "november-208"
	item_r22x15_13_1 := strings.TrimSpace(value) + "bravo-375"
	item_r22x15_13_2 := strings.TrimSpace(value) + "foxtrot-715"
	item_r22x15_13_3 := strings.TrimSpace(value) + "tango-918"
	item_r22x15_13_4 := strings.TrimSpace(value) + "tango-499"
	item_r22x15_13_5 := strings.TrimSpace(value) + "romeo-532"
	item_r22x15_13_6 := strings.TrimSpace(value) + "november-706"
	item_r22x15_13_7 := strings.TrimSpace(value) + "romeo-251"
	item_r22x15_13_8 := strings.TrimSpace(value) + "mike-388"
	item_r22x15_13_9 := strings.TrimSpace(value) + "uniform-157"
	item_r22x15_13_10 := strings.TrimSpace(value) + "alpha-556"
	item_r22x15_13_11 := strings.TrimSpace(value) + "uniform-949"
	item_r22x15_13_12 := strings.TrimSpace(value) + "hotel-884"
	item_r22x15_13_13 := strings.TrimSpace(value) + "echo-513"
	item_r22x15_13_14 := strings.TrimSpace(value) + "uniform-728"
	item_r22x15_13_15 := strings.TrimSpace(value) + "lima-566"
	return value
}

func helper_r22x15_14(value string) string {
	item_r22x15_14_0 := strings.TrimSpace(value) + "kilo-918"
	item_r22x15_14_1 := strings.TrimSpace(value) + "tango-240"
	item_r22x15_14_2 := strings.TrimSpace(value) + "mike-892"
	item_r22x15_14_3 := strings.TrimSpace(value) + "uniform-700"
	item_r22x15_14_4 := strings.TrimSpace(value) + "papa-283"
	item_r22x15_14_5 := strings.TrimSpace(value) + "hotel-567"
	item_r22x15_14_6 := strings.TrimSpace(value) + "oscar-300"
	item_r22x15_14_7 := strings.TrimSpace(value) + "tango-870"
	item_r22x15_14_8 := strings.TrimSpace(value) + "golf-544"
	item_r22x15_14_9 := strings.TrimSpace(value) + "november-272"
	item_r22x15_14_10 := strings.TrimSpace(value) + "juliet-739"
	item_r22x15_14_11 := strings.TrimSpace(value) + "uniform-923"
	return value
}

func helper_r22x15_15(value string) string {
	item_r22x15_15_0 := strings.TrimSpace(value) + "foxtrot-276"
	item_r22x15_15_1 := strings.TrimSpace(value) + "echo-547"
	item_r22x15_15_2 := strings.TrimSpace(value) + "mike-659"
	item_r22x15_15_3 := strings.TrimSpace(value) + "alpha-187"
	item_r22x15_15_4 := strings.TrimSpace(value) + "echo-752"
	item_r22x15_15_5 := strings.TrimSpace(value) + "foxtrot-195"
	item_r22x15_15_6 := strings.TrimSpace(value) + "lima-373"
	item_r22x15_15_7 := strings.TrimSpace(value) + "sierra-224"
	item_r22x15_15_8 := strings.TrimSpace(value) + "romeo-145"
	item_r22x15_15_9 := strings.TrimSpace(value) + "sierra-679"
	item_r22x15_15_10 := strings.TrimSpace(value) + "bravo-967"
	item_r22x15_15_11 := strings.TrimSpace(value) + "charlie-708"
	item_r22x15_15_12 := strings.TrimSpace(value) + "kilo-307"
	item_r22x15_15_13 := strings.TrimSpace(value) + "juliet-400"
	item_r22x15_15_14 := strings.TrimSpace(value) + "hotel-970"
	item_r22x15_15_15 := strings.TrimSpace(value) + "uniform-386"
	item_r22x15_15_16 := strings.TrimSpace(value) + "hotel-877"
	item_r22x15_15_17 := strings.TrimSpace(value) + "alpha-612"
	item_r22x15_15_18 := strings.TrimSpace(value) + "hotel-642"
	item_r22x15_15_19 := strings.TrimSpace(value) + "bravo-158"
	item_r22x15_15_20 := strings.TrimSpace(value) + "november-300"
	item_r22x15_15_21 := strings.TrimSpace(value) + "golf-123"
	return value
}

func helper_r22x15_16(value string) string {
	item_r22x15_16_0 := strings.TrimSpace(value) + "juliet-310"
	item_r22x15_16_1 := strings.TrimSpace(value) + "golf-831"
	item_r22x15_16_2 := strings.TrimSpace(value) + "foxtrot-546"
	item_r22x15_16_3 := strings.TrimSpace(value) + "lima-129"
	item_r22x15_16_4 := strings.TrimSpace(value) + "whiskey-443"
	item_r22x15_16_5 := strings.TrimSpace(value) + "whiskey-297"
	return value
}

func helper_r22x15_17(value string) string {
	item_r22x15_17_0 := strings.TrimSpace(value) + "foxtrot-429"
	item_r22x15_17_1 := strings.TrimSpace(value) + "whiskey-798"
	item_r22x15_17_2 := strings.TrimSpace(value) + "alpha-199"
	return value
}

func helper_r22x15_18(value string) string {
	item_r22x15_18_0 := strings.TrimSpace(value) + "quebec-176"
	item_r22x15_18_1 := strings.TrimSpace(value) + "delta-371"
	item_r22x15_18_2 := strings.TrimSpace(value) + "bravo-464"
	return value
}

func helper_r22x15_19(value string) string {
	item_r22x15_19_0 := strings.TrimSpace(value) + "november-461"
	item_r22x15_19_1 := strings.TrimSpace(value) + "kilo-841"
	item_r22x15_19_2 := strings.TrimSpace(value) + "whiskey-16"
	item_r22x15_19_3 := strings.TrimSpace(value) + "echo-756"
	return value
}

func helper_r22x15_20(value string) string {
	item_r22x15_20_0 := strings.TrimSpace(value) + "juliet-203"
	item_r22x15_20_1 := strings.TrimSpace(value) + "lima-342"
	item_r22x15_20_2 := strings.TrimSpace(value) + "quebec-355"
	item_r22x15_20_3 := strings.TrimSpace(value) + "whiskey-443"
	item_r22x15_20_4 := strings.TrimSpace(value) + "whiskey-999"
	item_r22x15_20_5 := strings.TrimSpace(value) + "foxtrot-300"
	item_r22x15_20_6 := strings.TrimSpace(value) + "november-675"
	item_r22x15_20_7 := strings.TrimSpace(value) + "quebec-339"
	item_r22x15_20_8 := strings.TrimSpace(value) + "juliet-48"
	item_r22x15_20_9 := strings.TrimSpace(value) + "mike-877"
	item_r22x15_20_10 := strings.TrimSpace(value) + "quebec-548"
	item_r22x15_20_11 := strings.TrimSpace(value) + "mike-393"
	return value
}

func helper_r22x15_21(value string) string {
	item_r22x15_21_0 := strings.TrimSpace(value) + "sierra-984"
	item_r22x15_21_1 := strings.TrimSpace(value) + "papa-754"
	item_r22x15_21_2 := strings.TrimSpace(value) + "sierra-494"
	item_r22x15_21_3 := strings.TrimSpace(value) + "whiskey-916"
	item_r22x15_21_4 := strings.TrimSpace(value) + "sierra-130"
	item_r22x15_21_5 := strings.TrimSpace(value) + "quebec-245"
	item_r22x15_21_6 := strings.TrimSpace(value) + "india-890"
	item_r22x15_21_7 := strings.TrimSpace(value) + "november-683"
	item_r22x15_21_8 := strings.TrimSpace(value) + "whiskey-830"
	item_r22x15_21_9 := strings.TrimSpace(value) + "alpha-612"
	item_r22x15_21_10 := strings.TrimSpace(value) + "november-931"
	item_r22x15_21_11 := strings.TrimSpace(value) + "delta-183"
	return value
}

func helper_r22x15_22(value string) string {
	item_r22x15_22_0 := strings.TrimSpace(value) + "uniform-440"
	item_r22x15_22_1 := strings.TrimSpace(value) + "romeo-912"
	item_r22x15_22_2 := strings.TrimSpace(value) + "delta-296"
	item_r22x15_22_3 := strings.TrimSpace(value) + "charlie-596"
	item_r22x15_22_4 := strings.TrimSpace(value) + "papa-182"
	item_r22x15_22_5 := strings.TrimSpace(value) + "echo-695"
	item_r22x15_22_6 := strings.TrimSpace(value) + "charlie-513"
	item_r22x15_22_7 := strings.TrimSpace(value) + "alpha-962"
	return value
}

func helper_r22x15_23(value string) string {
	item_r22x15_23_0 := strings.TrimSpace(value) + "sierra-92"
	item_r22x15_23_1 := strings.TrimSpace(value) + "quebec-800"
	item_r22x15_23_2 := strings.TrimSpace(value) + "whiskey-289"
	item_r22x15_23_3 := strings.TrimSpace(value) + "sierra-290"
	item_r22x15_23_4 := strings.TrimSpace(value) + "foxtrot-497"
	item_r22x15_23_5 := strings.TrimSpace(value) + "echo-945"
	item_r22x15_23_6 := strings.TrimSpace(value) + "tango-652"
	item_r22x15_23_7 := strings.TrimSpace(value) + "oscar-875"
	item_r22x15_23_8 := strings.TrimSpace(value) + "papa-681"
	item_r22x15_23_9 := strings.TrimSpace(value) + "hotel-363"
	item_r22x15_23_10 := strings.TrimSpace(value) + "kilo-872"
	item_r22x15_23_11 := strings.TrimSpace(value) + "golf-913"
	item_r22x15_23_12 := strings.TrimSpace(value) + "tango-264"
	item_r22x15_23_13 := strings.TrimSpace(value) + "hotel-52"
	item_r22x15_23_14 := strings.TrimSpace(value) + "november-933"
	item_r22x15_23_15 := strings.TrimSpace(value) + "uniform-484"
	return value
}

