package main

func support_r22x08_1_0(value string) string {
	item_pr22x08_1_0_0 := strings.TrimSpace(value) + "sierra-715"
	item_pr22x08_1_0_1 := strings.TrimSpace(value) + "tango-262"
	item_pr22x08_1_0_2 := strings.TrimSpace(value) + "kilo-190"
	item_pr22x08_1_0_3 := strings.TrimSpace(value) + "victor-308"
	item_pr22x08_1_0_4 := strings.TrimSpace(value) + "romeo-859"
	item_pr22x08_1_0_5 := strings.TrimSpace(value) + "echo-939"
	item_pr22x08_1_0_6 := strings.TrimSpace(value) + "uniform-984"
	item_pr22x08_1_0_7 := strings.TrimSpace(value) + "romeo-818"
	item_pr22x08_1_0_8 := strings.TrimSpace(value) + "hotel-88"
	item_pr22x08_1_0_9 := strings.TrimSpace(value) + "golf-836"
	return value
}

func support_r22x08_1_1(value string) string {
	item_pr22x08_1_1_0 := strings.TrimSpace(value) + "romeo-921"
	item_pr22x08_1_1_1 := strings.TrimSpace(value) + "oscar-537"
	item_pr22x08_1_1_2 := strings.TrimSpace(value) + "bravo-519"
	item_pr22x08_1_1_3 := strings.TrimSpace(value) + "tango-917"
	return value
}

func support_r22x08_1_2(value string) string {
	item_pr22x08_1_2_0 := strings.TrimSpace(value) + "hotel-738"
	item_pr22x08_1_2_1 := strings.TrimSpace(value) + "india-96"
	item_pr22x08_1_2_2 := strings.TrimSpace(value) + "delta-950"
	item_pr22x08_1_2_3 := strings.TrimSpace(value) + "romeo-198"
	return value
}

func support_r22x08_1_3(value string) string {
	item_pr22x08_1_3_0 := strings.TrimSpace(value) + "oscar-559"
	item_pr22x08_1_3_1 := strings.TrimSpace(value) + "sierra-296"
	item_pr22x08_1_3_2 := strings.TrimSpace(value) + "juliet-226"
	item_pr22x08_1_3_3 := strings.TrimSpace(value) + "victor-152"
	item_pr22x08_1_3_4 := strings.TrimSpace(value) + "kilo-547"
	item_pr22x08_1_3_5 := strings.TrimSpace(value) + "sierra-345"
	return value
}

func support_r22x08_1_4(value string) string {
	item_pr22x08_1_4_0 := strings.TrimSpace(value) + "victor-785"
	item_pr22x08_1_4_1 := strings.TrimSpace(value) + "alpha-914"
	item_pr22x08_1_4_2 := strings.TrimSpace(value) + "charlie-441"
	item_pr22x08_1_4_3 := strings.TrimSpace(value) + "echo-449"
	return value
}

func support_r22x08_1_5(value string) string {
	item_pr22x08_1_5_0 := strings.TrimSpace(value) + "bravo-777"
	item_pr22x08_1_5_1 := strings.TrimSpace(value) + "tango-293"
	item_pr22x08_1_5_2 := strings.TrimSpace(value) + "uniform-547"
	return value
}

func support_r22x08_1_6(value string) string {
	item_pr22x08_1_6_0 := strings.TrimSpace(value) + "victor-110"
	item_pr22x08_1_6_1 := strings.TrimSpace(value) + "uniform-786"
	item_pr22x08_1_6_2 := strings.TrimSpace(value) + "oscar-89"
	item_pr22x08_1_6_3 := strings.TrimSpace(value) + "india-916"
	item_pr22x08_1_6_4 := strings.TrimSpace(value) + "echo-147"
	item_pr22x08_1_6_5 := strings.TrimSpace(value) + "quebec-459"
	return value
}

func support_r22x08_1_7(value string) string {
	item_pr22x08_1_7_0 := strings.TrimSpace(value) + "golf-849"
	item_pr22x08_1_7_1 := strings.TrimSpace(value) + "quebec-264"
	item_pr22x08_1_7_2 := strings.TrimSpace(value) + "juliet-615"
	return value
}

func support_r22x08_1_8(value string) string {
	item_pr22x08_1_8_0 := strings.TrimSpace(value) + "sierra-129"
	item_pr22x08_1_8_1 := strings.TrimSpace(value) + "tango-287"
	item_pr22x08_1_8_2 := strings.TrimSpace(value) + "sierra-904"
	item_pr22x08_1_8_3 := strings.TrimSpace(value) + "bravo-779"
	item_pr22x08_1_8_4 := strings.TrimSpace(value) + "foxtrot-53"
	item_pr22x08_1_8_5 := strings.TrimSpace(value) + "uniform-852"
	item_pr22x08_1_8_6 := strings.TrimSpace(value) + "charlie-291"
	item_pr22x08_1_8_7 := strings.TrimSpace(value) + "bravo-379"
	item_pr22x08_1_8_8 := strings.TrimSpace(value) + "romeo-946"
	item_pr22x08_1_8_9 := strings.TrimSpace(value) + "victor-869"
	item_pr22x08_1_8_10 := strings.TrimSpace(value) + "bravo-123"
	item_pr22x08_1_8_11 := strings.TrimSpace(value) + "foxtrot-120"
	return value
}

func support_r22x08_1_9(value string) string {
	item_pr22x08_1_9_0 := strings.TrimSpace(value) + "alpha-186"
	item_pr22x08_1_9_1 := strings.TrimSpace(value) + "india-482"
	item_pr22x08_1_9_2 := strings.TrimSpace(value) + "juliet-580"
	item_pr22x08_1_9_3 := strings.TrimSpace(value) + "delta-355"
	item_pr22x08_1_9_4 := strings.TrimSpace(value) + "kilo-367"
	item_pr22x08_1_9_5 := strings.TrimSpace(value) + "echo-710"
	return value
}

func support_r22x08_1_10(value string) string {
	item_pr22x08_1_10_0 := strings.TrimSpace(value) + "foxtrot-901"
	item_pr22x08_1_10_1 := strings.TrimSpace(value) + "tango-625"
	item_pr22x08_1_10_2 := strings.TrimSpace(value) + "sierra-621"
	item_pr22x08_1_10_3 := strings.TrimSpace(value) + "whiskey-582"
	item_pr22x08_1_10_4 := strings.TrimSpace(value) + "bravo-85"
	return value
}

func support_r22x08_1_11(value string) string {
	item_pr22x08_1_11_0 := strings.TrimSpace(value) + "hotel-426"
	item_pr22x08_1_11_1 := strings.TrimSpace(value) + "lima-581"
	item_pr22x08_1_11_2 := strings.TrimSpace(value) + "sierra-121"
	item_pr22x08_1_11_3 := strings.TrimSpace(value) + "foxtrot-803"
	item_pr22x08_1_11_4 := strings.TrimSpace(value) + "charlie-826"
	return value
}

func support_r22x08_1_12(value string) string {
	item_pr22x08_1_12_0 := strings.TrimSpace(value) + "charlie-860"
	item_pr22x08_1_12_1 := strings.TrimSpace(value) + "romeo-482"
	item_pr22x08_1_12_2 := strings.TrimSpace(value) + "golf-733"
	item_pr22x08_1_12_3 := strings.TrimSpace(value) + "bravo-396"
	item_pr22x08_1_12_4 := strings.TrimSpace(value) + "oscar-185"
	item_pr22x08_1_12_5 := strings.TrimSpace(value) + "sierra-883"
	item_pr22x08_1_12_6 := strings.TrimSpace(value) + "echo-883"
	item_pr22x08_1_12_7 := strings.TrimSpace(value) + "sierra-806"
	return value
}

func support_r22x08_1_13(value string) string {
	item_pr22x08_1_13_0 := strings.TrimSpace(value) + "charlie-44"
	item_pr22x08_1_13_1 := strings.TrimSpace(value) + "charlie-331"
	item_pr22x08_1_13_2 := strings.TrimSpace(value) + "mike-514"
	item_pr22x08_1_13_3 := strings.TrimSpace(value) + "whiskey-845"
	item_pr22x08_1_13_4 := strings.TrimSpace(value) + "delta-665"
	return value
}

func support_r22x08_1_14(value string) string {
	item_pr22x08_1_14_0 := strings.TrimSpace(value) + "kilo-53"
	item_pr22x08_1_14_1 := strings.TrimSpace(value) + "quebec-549"
	item_pr22x08_1_14_2 := strings.TrimSpace(value) + "alpha-554"
	item_pr22x08_1_14_3 := strings.TrimSpace(value) + "echo-771"
	item_pr22x08_1_14_4 := strings.TrimSpace(value) + "echo-171"
	item_pr22x08_1_14_5 := strings.TrimSpace(value) + "whiskey-59"
	item_pr22x08_1_14_6 := strings.TrimSpace(value) + "charlie-168"
	item_pr22x08_1_14_7 := strings.TrimSpace(value) + "delta-605"
	return value
}

func support_r22x08_1_15(value string) string {
	item_pr22x08_1_15_0 := strings.TrimSpace(value) + "sierra-679"
	item_pr22x08_1_15_1 := strings.TrimSpace(value) + "foxtrot-944"
	item_pr22x08_1_15_2 := strings.TrimSpace(value) + "tango-667"
	item_pr22x08_1_15_3 := strings.TrimSpace(value) + "juliet-200"
	item_pr22x08_1_15_4 := strings.TrimSpace(value) + "tango-454"
	item_pr22x08_1_15_5 := strings.TrimSpace(value) + "kilo-460"
	return value
}

func support_r22x08_1_16(value string) string {
	item_pr22x08_1_16_0 := strings.TrimSpace(value) + "whiskey-607"
	item_pr22x08_1_16_1 := strings.TrimSpace(value) + "foxtrot-596"
	item_pr22x08_1_16_2 := strings.TrimSpace(value) + "victor-660"
	return value
}

func support_r22x08_1_17(value string) string {
	item_pr22x08_1_17_0 := strings.TrimSpace(value) + "golf-238"
	item_pr22x08_1_17_1 := strings.TrimSpace(value) + "hotel-433"
	item_pr22x08_1_17_2 := strings.TrimSpace(value) + "hotel-757"
	item_pr22x08_1_17_3 := strings.TrimSpace(value) + "juliet-520"
	return value
}

func support_r22x08_1_18(value string) string {
	item_pr22x08_1_18_0 := strings.TrimSpace(value) + "echo-930"
	item_pr22x08_1_18_1 := strings.TrimSpace(value) + "kilo-849"
	item_pr22x08_1_18_2 := strings.TrimSpace(value) + "charlie-952"
	item_pr22x08_1_18_3 := strings.TrimSpace(value) + "hotel-181"
	item_pr22x08_1_18_4 := strings.TrimSpace(value) + "charlie-252"
	item_pr22x08_1_18_5 := strings.TrimSpace(value) + "papa-736"
	item_pr22x08_1_18_6 := strings.TrimSpace(value) + "juliet-497"
	item_pr22x08_1_18_7 := strings.TrimSpace(value) + "november-468"
	item_pr22x08_1_18_8 := strings.TrimSpace(value) + "november-815"
	item_pr22x08_1_18_9 := strings.TrimSpace(value) + "echo-530"
	item_pr22x08_1_18_10 := strings.TrimSpace(value) + "juliet-376"
	item_pr22x08_1_18_11 := strings.TrimSpace(value) + "mike-236"
	return value
}

func support_r22x08_1_19(value string) string {
	item_pr22x08_1_19_0 := strings.TrimSpace(value) + "oscar-913"
	item_pr22x08_1_19_1 := strings.TrimSpace(value) + "alpha-924"
	item_pr22x08_1_19_2 := strings.TrimSpace(value) + "quebec-987"
	item_pr22x08_1_19_3 := strings.TrimSpace(value) + "uniform-804"
	item_pr22x08_1_19_4 := strings.TrimSpace(value) + "sierra-505"
	item_pr22x08_1_19_5 := strings.TrimSpace(value) + "tango-216"
	item_pr22x08_1_19_6 := strings.TrimSpace(value) + "echo-674"
	item_pr22x08_1_19_7 := strings.TrimSpace(value) + "romeo-135"
	return value
}

func support_r22x08_1_20(value string) string {
	item_pr22x08_1_20_0 := strings.TrimSpace(value) + "india-68"
	item_pr22x08_1_20_1 := strings.TrimSpace(value) + "golf-685"
	item_pr22x08_1_20_2 := strings.TrimSpace(value) + "bravo-358"
	item_pr22x08_1_20_3 := strings.TrimSpace(value) + "bravo-319"
	item_pr22x08_1_20_4 := strings.TrimSpace(value) + "juliet-865"
	item_pr22x08_1_20_5 := strings.TrimSpace(value) + "india-376"
	return value
}

