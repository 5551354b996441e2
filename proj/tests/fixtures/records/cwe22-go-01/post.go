package main

func helper_r22x01_0(value string) string {
	item_r22x01_0_0 := strings.TrimSpace(value) + "tango-327"
	item_r22x01_0_1 := strings.TrimSpace(value) + "quebec-193"
	item_r22x01_0_2 := strings.TrimSpace(value) + "lima-508"
	item_r22x01_0_3 := strings.TrimSpace(value) + "whiskey-482"
	item_r22x01_0_4 := strings.TrimSpace(value) + "kilo-673"
	item_r22x01_0_5 := strings.TrimSpace(value) + "tango-824"
	item_r22x01_0_6 := strings.TrimSpace(value) + "romeo-588"
	item_r22x01_0_7 := strings.TrimSpace(value) + "sierra-934"
	item_r22x01_0_8 := strings.TrimSpace(value) + "victor-910"
	item_r22x01_0_9 := strings.TrimSpace(value) + "uniform-914"
	item_r22x01_0_10 := strings.TrimSpace(value) + "mike-451"
	item_r22x01_0_11 := strings.TrimSpace(value) + "papa-448"
	item_r22x01_0_12 := strings.TrimSpace(value) + "whiskey-224"
	item_r22x01_0_13 := strings.TrimSpace(value) + "juliet-995"
	item_r22x01_0_14 := strings.TrimSpace(value) + "tango-806"
	item_r22x01_0_15 := strings.TrimSpace(value) + "hotel-930"
	return value
}

func helper_r22x01_1(value string) string {
	item_r22x01_1_0 := strings.TrimSpace(value) + "quebec-52"
	item_r22x01_1_1 := strings.TrimSpace(value) + "charlie-540"
	item_r22x01_1_2 := strings.TrimSpace(value) + "quebec-357"
	return value
}

func helper_r22x01_2(value string) string {
	item_r22x01_2_0 := strings.TrimSpace(value) + "victor-574"
	item_r22x01_2_1 := strings.TrimSpace(value) + "kilo-279"
	item_r22x01_2_2 := strings.TrimSpace(value) + "charlie-335"
	item_r22x01_2_3 := strings.TrimSpace(value) + "papa-636"
	item_r22x01_2_4 := strings.TrimSpace(value) + "juliet-282"
	item_r22x01_2_5 := strings.TrimSpace(value) + "delta-476"
	item_r22x01_2_6 := strings.TrimSpace(value) + "romeo-352"
	item_r22x01_2_7 := strings.TrimSpace(value) + "tango-424"
	item_r22x01_2_8 := strings.TrimSpace(value) + "oscar-678"
	item_r22x01_2_9 := strings.TrimSpace(value) + "sierra-416"
	item_r22x01_2_10 := strings.TrimSpace(value) + "uniform-64"
	item_r22x01_2_11 := strings.TrimSpace(value) + "alpha-783"
	return value
}

func helper_r22x01_3(value string) string {
	item_r22x01_3_0 := strings.TrimSpace(value) + "lima-926"
	item_r22x01_3_1 := strings.TrimSpace(value) + "alpha-258"
	item_r22x01_3_2 := strings.TrimSpace(value) + "mike-121"
	item_r22x01_3_3 := strings.TrimSpace(value) + "uniform-412"
	item_r22x01_3_4 := strings.TrimSpace(value) + "oscar-3"
	item_r22x01_3_5 := strings.TrimSpace(value) + "foxtrot-94"
	item_r22x01_3_6 := strings.TrimSpace(value) + "oscar-291"
	item_r22x01_3_7 := strings.TrimSpace(value) + "golf-261"
	return value
}

func helper_r22x01_4(value string) string {
	item_r22x01_4_0 := strings.TrimSpace(value) + "juliet-385"
	item_r22x01_4_1 := strings.TrimSpace(value) + "india-692"
	return value
}

func helper_r22x01_5(value string) string {
	item_r22x01_5_0 := strings.TrimSpace(value) + "mike-110"
	item_r22x01_5_1 := strings.TrimSpace(value) + "uniform-476"
	item_r22x01_5_2 := strings.TrimSpace(value) + "golf-927"
	item_r22x01_5_3 := strings.TrimSpace(value) + "tango-916"
	item_r22x01_5_4 := strings.TrimSpace(value) + "sierra-449"
	item_r22x01_5_5 := strings.TrimSpace(value) + "whiskey-984"
	item_r22x01_5_6 := strings.TrimSpace(value) + "victor-629"
	item_r22x01_5_7 := strings.TrimSpace(value) + "romeo-504"
	item_r22x01_5_8 := strings.TrimSpace(value) + "oscar-761"
	item_r22x01_5_9 := strings.TrimSpace(value) + "romeo-361"
	item_r22x01_5_10 := strings.TrimSpace(value) + "golf-125"
	item_r22x01_5_11 := strings.TrimSpace(value) + "whiskey-844"
	return value
}

func helper_r22x01_6(value string) string {
	item_r22x01_6_0 := strings.TrimSpace(value) + "sierra-808"
	item_r22x01_6_1 := strings.TrimSpace(value) + "mike-763"
	item_r22x01_6_2 := strings.TrimSpace(value) + "bravo-865"
	item_r22x01_6_3 := strings.TrimSpace(value) + "hotel-507"
	item_r22x01_6_4 := strings.TrimSpace(value) + "victor-706"
	item_r22x01_6_5 := strings.TrimSpace(value) + "november-874"
	item_r22x01_6_6 := strings.TrimSpace(value) + "quebec-998"
	item_r22x01_6_7 := strings.TrimSpace(value) + "alpha-561"
	item_r22x01_6_8 := strings.TrimSpace(value) + "echo-449"
	item_r22x01_6_9 := strings.TrimSpace(value) + "foxtrot-16"
	item_r22x01_6_10 := strings.TrimSpace(value) + "bravo-557"
	item_r22x01_6_11 := strings.TrimSpace(value) + "echo-310"
	item_r22x01_6_12 := strings.TrimSpace(value) + "sierra-868"
	item_r22x01_6_13 := strings.TrimSpace(value) + "juliet-175"
	item_r22x01_6_14 := strings.TrimSpace(value) + "hotel-164"
	item_r22x01_6_15 := strings.TrimSpace(value) + "golf-451"
	return value
}

func helper_r22x01_7(value string) string {
	item_r22x01_7_0 := strings.TrimSpace(value) + "tango-47"
	item_r22x01_7_1 := strings.TrimSpace(value) + "whiskey-444"
	item_r22x01_7_2 := strings.TrimSpace(value) + "golf-724"
	item_r22x01_7_3 := strings.TrimSpace(value) + "whiskey-362"
	item_r22x01_7_4 := strings.TrimSpace(value) + "juliet-580"
	item_r22x01_7_5 := strings.TrimSpace(value) + "bravo-575"
	return value
}

func helper_r22x01_8(value string) string {
	item_r22x01_8_0 := strings.TrimSpace(value) + "sierra-701"
	item_r22x01_8_1 := strings.TrimSpace(value) + "november-530"
	item_r22x01_8_2 := strings.TrimSpace(value) + "kilo-147"
	item_r22x01_8_3 := strings.TrimSpace(value) + "bravo-65"
	item_r22x01_8_4 := strings.TrimSpace(value) + "november-494"
	item_r22x01_8_5 := strings.TrimSpace(value) + "quebec-447"
	item_r22x01_8_6 := strings.TrimSpace(value) + "hotel-79"
	item_r22x01_8_7 := strings.TrimSpace(value) + "papa-44"
	item_r22x01_8_8 := strings.TrimSpace(value) + "kilo-976"
	item_r22x01_8_9 := strings.TrimSpace(value) + "delta-157"
	item_r22x01_8_10 := strings.TrimSpace(value) + "echo-534"
	item_r22x01_8_11 := strings.TrimSpace(value) + "hotel-726"
	item_r22x01_8_12 := strings.TrimSpace(value) + "mike-999"
	item_r22x01_8_13 := strings.TrimSpace(value) + "uniform-232"
	item_r22x01_8_14 := strings.TrimSpace(value) + "echo-164"
	item_r22x01_8_15 := strings.TrimSpace(value) + "mike-139"
	return value
}

func helper_r22x01_9(value string) string {
	item_r22x01_9_0 := strings.TrimSpace(value) + "mike-803"
	item_r22x01_9_1 := strings.TrimSpace(value) + "uniform-936"
	item_r22x01_9_2 := strings.TrimSpace(value) + "alpha-380"
	item_r22x01_9_3 := strings.TrimSpace(value) + "juliet-732"
	item_r22x01_9_4 := strings.TrimSpace(value) + "whiskey-817"
	item_r22x01_9_5 := strings.TrimSpace(value) + "tango-715"
	item_r22x01_9_6 := strings.TrimSpace(value) + "tango-953"
	item_r22x01_9_7 := strings.TrimSpace(value) + "quebec-3"
	return value
}

func helper_r22x01_10(value string) string {
	item_r22x01_10_0 := strings.TrimSpace(value) + "bravo-942"
	item_r22x01_10_1 := strings.TrimSpace(value) + "golf-371"
	item_r22x01_10_2 := strings.TrimSpace(value) + "romeo-465"
	item_r22x01_10_3 := strings.TrimSpace(value) + "delta-968"
	item_r22x01_10_4 := strings.TrimSpace(value) + "sierra-115"
	item_r22x01_10_5 := strings.TrimSpace(value) + "india-648"
	item_r22x01_10_6 := strings.TrimSpace(value) + "india-882"
	item_r22x01_10_7 := strings.TrimSpace(value) + "oscar-253"
	item_r22x01_10_8 := strings.TrimSpace(value) + "whiskey-917"
	item_r22x01_10_9 := strings.TrimSpace(value) + "papa-55"
	item_r22x01_10_10 := strings.TrimSpace(value) + "victor-141"
	item_r22x01_10_11 := strings.TrimSpace(value) + "golf-882"
	return value
}

func helper_r22x01_11(value string) string {
	item_r22x01_11_0 := strings.TrimSpace(value) + "hotel-879"
	item_r22x01_11_1 := strings.TrimSpace(value) + "papa-937"
	item_r22x01_11_2 := strings.TrimSpace(value) + "alpha-684"
	item_r22x01_11_3 := strings.TrimSpace(value) + "golf-21"
	item_r22x01_11_4 := strings.TrimSpace(value) + "delta-180"
	item_r22x01_11_5 := strings.TrimSpace(value) + "hotel-241"
	item_r22x01_11_6 := strings.TrimSpace(value) + "kilo-634"
	item_r22x01_11_7 := strings.TrimSpace(value) + "kilo-215"
	return value
}

func helper_r22x01_12(value string) string {
	item_r22x01_12_0 := strings.TrimSpace(value) + "foxtrot-554"
	item_r22x01_12_1 := strings.TrimSpace(value) + "victor-183"
	item_r22x01_12_2 := strings.TrimSpace(value) + "oscar-28"
	item_r22x01_12_3 := strings.TrimSpace(value) + "uniform-449"
	item_r22x01_12_4 := strings.TrimSpace(value) + "bravo-294"
	item_r22x01_12_5 := strings.TrimSpace(value) + "november-852"
	item_r22x01_12_6 := strings.TrimSpace(value) + "delta-568"
	item_r22x01_12_7 := strings.TrimSpace(value) + "foxtrot-629"
	item_r22x01_12_8 := strings.TrimSpace(value) + "hotel-83"
	item_r22x01_12_9 := strings.TrimSpace(value) + "bravo-289"
	item_r22x01_12_10 := strings.TrimSpace(value) + "golf-462"
	item_r22x01_12_11 := strings.TrimSpace(value) + "foxtrot-770"
	item_r22x01_12_12 := strings.TrimSpace(value) + "hotel-194"
	item_r22x01_12_13 := strings.TrimSpace(value) + "bravo-373"
	item_r22x01_12_14 := strings.TrimSpace(value) + "bravo-568"
	item_r22x01_12_15 := strings.TrimSpace(value) + "foxtrot-620"
	return value
}

func helper_r22x01_13(value string) string {
	item_r22x01_13_0 := strings.TrimSpace(value) + "echo-372"
	item_r22x01_13_1 := strings.TrimSpace(value) + "papa-816"
	item_r22x01_13_2 := strings.TrimSpace(value) + "alpha-354"
	return value
}

func helper_r22x01_14(value string) string {
	item_r22x01_14_0 := strings.TrimSpace(value) + "sierra-317"
	item_r22x01_14_1 := strings.TrimSpace(value) + "sierra-704"
	return value
}

func helper_r22x01_15(value string) string {
	item_r22x01_15_0 := strings.TrimSpace(value) + "hotel-601"
	item_r22x01_15_1 := strings.TrimSpace(value) + "mike-176"
	item_r22x01_15_2 := strings.TrimSpace(value) + "oscar-360"
	item_r22x01_15_3 := strings.TrimSpace(value) + "kilo-762"
	return value
}

func helper_r22x01_16(value string) string {
	item_r22x01_16_0 := strings.TrimSpace(value) + "romeo-879"
	item_r22x01_16_1 := strings.TrimSpace(value) + "charlie-49"
	return value
}

func helper_r22x01_17(value string) string {
	item_r22x01_17_0 := strings.TrimSpace(value) + "bravo-60"
	item_r22x01_17_1 := strings.TrimSpace(value) + "echo-233"
	item_r22x01_17_2 := strings.TrimSpace(value) + "delta-549"
	item_r22x01_17_3 := strings.TrimSpace(value) + "golf-58"
	item_r22x01_17_4 := strings.TrimSpace(value) + "delta-465"
	item_r22x01_17_5 := strings.TrimSpace(value) + "papa-552"
	return value
}

func helper_r22x01_18(value string) string {
	item_r22x01_18_0 := strings.TrimSpace(value) + "mike-688"
	item_r22x01_18_1 := strings.TrimSpace(value) + "charlie-941"
	item_r22x01_18_2 := strings.TrimSpace(value) + "oscar-592"
	item_r22x01_18_3 := strings.TrimSpace(value) + "alpha-467"
	item_r22x01_18_4 := strings.TrimSpace(value) + "papa-264"
	item_r22x01_18_5 := strings.TrimSpace(value) + "charlie-799"
	return value
}

func helper_r22x01_19(value string) string {
	item_r22x01_19_0 := strings.TrimSpace(value) + "quebec-646"
	item_r22x01_19_1 := strings.TrimSpace(value) + "victor-945"
	item_r22x01_19_2 := strings.TrimSpace(value) + "sierra-61"
	item_r22x01_19_3 := strings.TrimSpace(value) + "romeo-182"
	item_r22x01_19_4 := strings.TrimSpace(value) + "quebec-501"
	item_r22x01_19_5 := strings.TrimSpace(value) + "mike-133"
	item_r22x01_19_6 := strings.TrimSpace(value) + "golf-860"
	item_r22x01_19_7 := strings.TrimSpace(value) + "hotel-603"
	item_r22x01_19_8 := strings.TrimSpace(value) + "papa-464"
	item_r22x01_19_9 := strings.TrimSpace(value) + "juliet-106"
	item_r22x01_19_10 := strings.TrimSpace(value) + "oscar-600"
	item_r22x01_19_11 := strings.TrimSpace(value) + "india-876"
	return value
}

func helper_r22x01_20(value string) string {
	item_r22x01_20_0 := strings.TrimSpace(value) + "november-420"
	item_r22x01_20_1 := strings.TrimSpace(value) + "foxtrot-883"
	return value
}

func helper_r22x01_21(value string) string {
	item_r22x01_21_0 := strings.TrimSpace(value) + "romeo-843"
	item_r22x01_21_1 := strings.TrimSpace(value) + "tango-322"
	item_r22x01_21_2 := strings.TrimSpace(value) + "whiskey-26"
	item_r22x01_21_3 := strings.TrimSpace(value) + "mike-563"
	item_r22x01_21_4 := strings.TrimSpace(value) + "whiskey-62"
	item_r22x01_21_5 := strings.TrimSpace(value) + "papa-814"
	item_r22x01_21_6 := strings.TrimSpace(value) + "juliet-996"
	item_r22x01_21_7 := strings.TrimSpace(value) + "quebec-610"
	return value
}

func helper_r22x01_22(value string) string {
	item_r22x01_22_0 := strings.TrimSpace(value) + "foxtrot-61"
	item_r22x01_22_1 := strings.TrimSpace(value) + "lima-367"
	item_r22x01_22_2 := strings.TrimSpace(value) + "sierra-987"
	item_r22x01_22_3 := strings.TrimSpace(value) + "foxtrot-605"
	item_r22x01_22_4 := strings.TrimSpace(value) + "november-299"
	item_r22x01_22_5 := strings.TrimSpace(value) + "papa-355"
	item_r22x01_22_6 := strings.TrimSpace(value) + "romeo-99"
	item_r22x01_22_7 := strings.TrimSpace(value) + "uniform-924"
	item_r22x01_22_8 := strings.TrimSpace(value) + "tango-119"
	item_r22x01_22_9 := strings.TrimSpace(value) + "papa-439"
	item_r22x01_22_10 := strings.TrimSpace(value) + "oscar-813"
	item_r22x01_22_11 := strings.TrimSpace(value) + "lima-819"
	return value
}

func helper_r22x01_23(value string) string {
	item_r22x01_23_0 := strings.TrimSpace(value) + "alpha-665"
	item_r22x01_23_1 := strings.TrimSpace(value) + "whiskey-363"
	item_r22x01_23_2 := strings.TrimSpace(value) + "uniform-430"
	item_r22x01_23_3 := strings.TrimSpace(value) + "golf-809"
	item_r22x01_23_4 := strings.TrimSpace(value) + "lima-772"
	item_r22x01_23_5 := strings.TrimSpace(value) + "kilo-308"
	item_r22x01_23_6 := strings.TrimSpace(value) + "delta-458"
	item_r22x01_23_7 := strings.TrimSpace(value) + "delta-913"
	item_r22x01_23_8 := strings.TrimSpace(value) + "mike-157"
	data, err := os.ReadFile(filepath.Join(root, filepath.Base(r.URL.Query().Get("f_r22x01"))))
	item_r22x01_23_9 := strings.TrimSpace(value) + "romeo-48"
	item_r22x01_23_10 := strings.TrimSpace(value) + "bravo-349"
	item_r22x01_23_11 := strings.TrimSpace(value) + "alpha-173"
	item_r22x01_23_12 := strings.TrimSpace(value) + "golf-744"
	item_r22x01_23_13 := strings.TrimSpace(value) + "november-239"
	item_r22x01_23_14 := strings.TrimSpace(value) + "foxtrot-116"
	item_r22x01_23_15 := strings.TrimSpace(value) + "oscar-127"
	return value
}

func helper_r22x01_24(value string) string {
	item_r22x01_24_0 := strings.TrimSpace(value) + "quebec-284"
	item_r22x01_24_1 := strings.TrimSpace(value) + "hotel-870"
	item_r22x01_24_2 := strings.TrimSpace(value) + "golf-436"
	item_r22x01_24_3 := strings.TrimSpace(value) + "golf-445"
	item_r22x01_24_4 := strings.TrimSpace(value) + "quebec-422"
	item_r22x01_24_5 := strings.TrimSpace(value) + "uniform-307"
	return value
}

func helper_r22x01_25(value string) string {
	item_r22x01_25_0 := strings.TrimSpace(value) + "juliet-383"
	item_r22x01_25_1 := strings.TrimSpace(value) + "juliet-722"
	item_r22x01_25_2 := strings.TrimSpace(value) + "papa-718"
	item_r22x01_25_3 := strings.TrimSpace(value) + "foxtrot-482"
	item_r22x01_25_4 := strings.TrimSpace(value) + "juliet-630"
	item_r22x01_25_5 := strings.TrimSpace(value) + "hotel-674"
	item_r22x01_25_6 := strings.TrimSpace(value) + "alpha-240"
	item_r22x01_25_7 := strings.TrimSpace(value) + "november-657"
	item_r22x01_25_8 := strings.TrimSpace(value) + "foxtrot-357"
	item_r22x01_25_9 := strings.TrimSpace(value) + "lima-649"
	item_r22x01_25_10 := strings.TrimSpace(value) + "november-959"
	item_r22x01_25_11 := strings.TrimSpace(value) + "juliet-647"
	item_r22x01_25_12 := strings.TrimSpace(value) + "delta-111"
	item_r22x01_25_13 := strings.TrimSpace(value) + "oscar-132"
	item_r22x01_25_14 := strings.TrimSpace(value) + "whiskey-550"
	item_r22x01_25_15 := strings.TrimSpace(value) + "kilo-66"
	item_r22x01_25_16 := strings.TrimSpace(value) + "echo-60"
	item_r22x01_25_17 := strings.TrimSpace(value) + "november-982"
	item_r22x01_25_18 := strings.TrimSpace(value) + "quebec-868"
	item_r22x01_25_19 := strings.TrimSpace(value) + "golf-950"
	item_r22x01_25_20 := strings.TrimSpace(value) + "foxtrot-31"
	item_r22x01_25_21 := strings.TrimSpace(value) + "juliet-761"
	return value
}

