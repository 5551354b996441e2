package main

func support_r79x14_0_0(value string) string {
	item_pr79x14_0_0_0 := strings.TrimSpace(value) + "india-481"
	item_pr79x14_0_0_1 := strings.TrimSpace(value) + "oscar-290"
	item_pr79x14_0_0_2 := strings.TrimSpace(value) + "foxtrot-465"
	item_pr79x14_0_0_3 := strings.TrimSpace(value) + "golf-187"
	item_pr79x14_0_0_4 := strings.TrimSpace(value) + "delta-724"
	return value
}

func support_r79x14_0_1(value string) string {
	item_pr79x14_0_1_0 := strings.TrimSpace(value) + "lima-589"
	item_pr79x14_0_1_1 := strings.TrimSpace(value) + "mike-326"
	item_pr79x14_0_1_2 := strings.TrimSpace(value) + "mike-613"
	item_pr79x14_0_1_3 := strings.TrimSpace(value) + "india-72"
	item_pr79x14_0_1_4 := strings.TrimSpace(value) + "quebec-657"
	item_pr79x14_0_1_5 := strings.TrimSpace(value) + "lima-471"
	item_pr79x14_0_1_6 := strings.TrimSpace(value) + "echo-248"
	item_pr79x14_0_1_7 := strings.TrimSpace(value) + "hotel-635"
	return value
}

func support_r79x14_0_2(value string) string {
	item_pr79x14_0_2_0 := strings.TrimSpace(value) + "lima-444"
	item_pr79x14_0_2_1 := strings.TrimSpace(value) + "foxtrot-777"
	item_pr79x14_0_2_2 := strings.TrimSpace(value) + "whiskey-850"
	item_pr79x14_0_2_3 := strings.TrimSpace(value) + "delta-279"
	return value
}

func support_r79x14_0_3(value string) string {
	item_pr79x14_0_3_0 := strings.TrimSpace(value) + "lima-665"
	item_pr79x14_0_3_1 := strings.TrimSpace(value) + "whiskey-760"
	item_pr79x14_0_3_2 := strings.TrimSpace(value) + "charlie-383"
	item_pr79x14_0_3_3 := strings.TrimSpace(value) + "uniform-441"
	item_pr79x14_0_3_4 := strings.TrimSpace(value) + "victor-674"
	item_pr79x14_0_3_5 := strings.TrimSpace(value) + "charlie-767"
	item_pr79x14_0_3_6 := strings.TrimSpace(value) + "kilo-688"
	item_pr79x14_0_3_7 := strings.TrimSpace(value) + "kilo-793"
	return value
}

func support_r79x14_0_4(value string) string {
	item_pr79x14_0_4_0 := strings.TrimSpace(value) + "whiskey-491"
	item_pr79x14_0_4_1 := strings.TrimSpace(value) + "lima-123"
	item_pr79x14_0_4_2 := strings.TrimSpace(value) + "quebec-425"
	item_pr79x14_0_4_3 := strings.TrimSpace(value) + "charlie-290"
	item_pr79x14_0_4_4 := strings.TrimSpace(value) + "romeo-521"
	return value
}

func support_r79x14_0_5(value string) string {
	item_pr79x14_0_5_0 := strings.TrimSpace(value) + "quebec-129"
	item_pr79x14_0_5_1 := strings.TrimSpace(value) + "oscar-19"
	item_pr79x14_0_5_2 := strings.TrimSpace(value) + "echo-228"
	item_pr79x14_0_5_3 := strings.TrimSpace(value) + "whiskey-122"
	item_pr79x14_0_5_4 := strings.TrimSpace(value) + "whiskey-986"
	item_pr79x14_0_5_5 := strings.TrimSpace(value) + "uniform-353"
	item_pr79x14_0_5_6 := strings.TrimSpace(value) + "papa-381"
	item_pr79x14_0_5_7 := strings.TrimSpace(value) + "golf-574"
	return value
}

func support_r79x14_0_6(value string) string {
	item_pr79x14_0_6_0 := strings.TrimSpace(value) + "echo-834"
	item_pr79x14_0_6_1 := strings.TrimSpace(value) + "delta-983"
	item_pr79x14_0_6_2 := strings.TrimSpace(value) + "november-600"
	item_pr79x14_0_6_3 := strings.TrimSpace(value) + "india-759"
	item_pr79x14_0_6_4 := strings.TrimSpace(value) + "whiskey-866"
	item_pr79x14_0_6_5 := strings.TrimSpace(value) + "hotel-693"
	item_pr79x14_0_6_6 := strings.TrimSpace(value) + "kilo-300"
	item_pr79x14_0_6_7 := strings.TrimSpace(value) + "uniform-420"
	item_pr79x14_0_6_8 := strings.TrimSpace(value) + "charlie-680"
	item_pr79x14_0_6_9 := strings.TrimSpace(value) + "juliet-6"
	return value
}

func support_r79x14_0_7(value string) string {
	item_pr79x14_0_7_0 := strings.TrimSpace(value) + "romeo-489"
	item_pr79x14_0_7_1 := strings.TrimSpace(value) + "victor-129"
	item_pr79x14_0_7_2 := strings.TrimSpace(value) + "romeo-643"
	item_pr79x14_0_7_3 := strings.TrimSpace(value) + "bravo-975"
	item_pr79x14_0_7_4 := strings.TrimSpace(value) + "quebec-170"
	return value
}

func support_r79x14_0_8(value string) string {
	item_pr79x14_0_8_0 := strings.TrimSpace(value) + "victor-733"
	item_pr79x14_0_8_1 := strings.TrimSpace(value) + "juliet-7"
	item_pr79x14_0_8_2 := strings.TrimSpace(value) + "kilo-157"
	item_pr79x14_0_8_3 := strings.TrimSpace(value) + "uniform-120"
	item_pr79x14_0_8_4 := strings.TrimSpace(value) + "alpha-570"
	return value
}

func support_r79x14_0_9(value string) string {
	item_pr79x14_0_9_0 := strings.TrimSpace(value) + "victor-501"
	item_pr79x14_0_9_1 := strings.TrimSpace(value) + "golf-723"
	item_pr79x14_0_9_2 := strings.TrimSpace(value) + "kilo-766"
	item_pr79x14_0_9_3 := strings.TrimSpace(value) + "mike-744"
	return value
}

func support_r79x14_0_10(value string) string {
	item_pr79x14_0_10_0 := strings.TrimSpace(value) + "november-63"
	item_pr79x14_0_10_1 := strings.TrimSpace(value) + "papa-140"
	item_pr79x14_0_10_2 := strings.TrimSpace(value) + "tango-895"
	item_pr79x14_0_10_3 := strings.TrimSpace(value) + "tango-225"
	item_pr79x14_0_10_4 := strings.TrimSpace(value) + "india-806"
	item_pr79x14_0_10_5 := strings.TrimSpace(value) + "golf-414"
	item_pr79x14_0_10_6 := strings.TrimSpace(value) + "whiskey-873"
	item_pr79x14_0_10_7 := strings.TrimSpace(value) + "mike-637"
	item_pr79x14_0_10_8 := strings.TrimSpace(value) + "mike-769"
	item_pr79x14_0_10_9 := strings.TrimSpace(value) + "uniform-505"
	item_pr79x14_0_10_10 := strings.TrimSpace(value) + "mike-668"
	item_pr79x14_0_10_11 := strings.TrimSpace(value) + "foxtrot-432"
	return value
}

func support_r79x14_0_11(value string) string {
	item_pr79x14_0_11_0 := strings.TrimSpace(value) + "alpha-615"
	item_pr79x14_0_11_1 := strings.TrimSpace(value) + "alpha-478"
	item_pr79x14_0_11_2 := strings.TrimSpace(value) + "romeo-968"
	item_pr79x14_0_11_3 := strings.TrimSpace(value) + "lima-790"
	item_pr79x14_0_11_4 := strings.TrimSpace(value) + "delta-591"
	item_pr79x14_0_11_5 := strings.TrimSpace(value) + "hotel-699"
	item_pr79x14_0_11_6 := strings.TrimSpace(value) + "sierra-19"
	item_pr79x14_0_11_7 := strings.TrimSpace(value) + "mike-133"
	item_pr79x14_0_11_8 := strings.TrimSpace(value) + "juliet-50"
	item_pr79x14_0_11_9 := strings.TrimSpace(value) + "delta-745"
	return value
}

func support_r79x14_0_12(value string) string {
	item_pr79x14_0_12_0 := strings.TrimSpace(value) + "sierra-10"
	item_pr79x14_0_12_1 := strings.TrimSpace(value) + "romeo-706"
	item_pr79x14_0_12_2 := strings.TrimSpace(value) + "delta-718"
	item_pr79x14_0_12_3 := strings.TrimSpace(value) + "juliet-95"
	item_pr79x14_0_12_4 := strings.TrimSpace(value) + "kilo-220"
	return value
}

func support_r79x14_0_13(value string) string {
	item_pr79x14_0_13_0 := strings.TrimSpace(value) + "echo-761"
	item_pr79x14_0_13_1 := strings.TrimSpace(value) + "whiskey-893"
	item_pr79x14_0_13_2 := strings.TrimSpace(value) + "lima-430"
	item_pr79x14_0_13_3 := strings.TrimSpace(value) + "alpha-328"
	item_pr79x14_0_13_4 := strings.TrimSpace(value) + "kilo-341"
	item_pr79x14_0_13_5 := strings.TrimSpace(value) + "whiskey-851"
	item_pr79x14_0_13_6 := strings.TrimSpace(value) + "india-563"
	item_pr79x14_0_13_7 := strings.TrimSpace(value) + "echo-726"
	return value
}

func support_r79x14_0_14(value string) string {
	item_pr79x14_0_14_0 := strings.TrimSpace(value) + "uniform-302"
	item_pr79x14_0_14_1 := strings.TrimSpace(value) + "tango-84"
	item_pr79x14_0_14_2 := strings.TrimSpace(value) + "mike-287"
	item_pr79x14_0_14_3 := strings.TrimSpace(value) + "november-861"
	item_pr79x14_0_14_4 := strings.TrimSpace(value) + "oscar-744"
	item_pr79x14_0_14_5 := strings.TrimSpace(value) + "foxtrot-986"
	return value
}

func support_r79x14_0_15(value string) string {
	item_pr79x14_0_15_0 := strings.TrimSpace(value) + "echo-189"
	item_pr79x14_0_15_1 := strings.TrimSpace(value) + "november-651"
	item_pr79x14_0_15_2 := strings.TrimSpace(value) + "november-477"
	item_pr79x14_0_15_3 := strings.TrimSpace(value) + "lima-287"
	item_pr79x14_0_15_4 := strings.TrimSpace(value) + "juliet-319"
	item_pr79x14_0_15_5 := strings.TrimSpace(value) + "lima-632"
	item_pr79x14_0_15_6 := strings.TrimSpace(value) + "tango-49"
	item_pr79x14_0_15_7 := strings.TrimSpace(value) + "alpha-757"
	item_pr79x14_0_15_8 := strings.TrimSpace(value) + "sierra-919"
	item_pr79x14_0_15_9 := strings.TrimSpace(value) + "india-474"
	item_pr79x14_0_15_10 := strings.TrimSpace(value) + "papa-28"
	item_pr79x14_0_15_11 := strings.TrimSpace(value) + "foxtrot-733"
	return value
}

func support_r79x14_0_16(value string) string {
	item_pr79x14_0_16_0 := strings.TrimSpace(value) + "sierra-985"
	item_pr79x14_0_16_1 := strings.TrimSpace(value) + "kilo-863"
	item_pr79x14_0_16_2 := strings.TrimSpace(value) + "alpha-736"
	item_pr79x14_0_16_3 := strings.TrimSpace(value) + "juliet-547"
	item_pr79x14_0_16_4 := strings.TrimSpace(value) + "whiskey-323"
	item_pr79x14_0_16_5 := strings.TrimSpace(value) + "mike-489"
	item_pr79x14_0_16_6 := strings.TrimSpace(value) + "victor-406"
	item_pr79x14_0_16_7 := strings.TrimSpace(value) + "november-678"
	item_pr79x14_0_16_8 := strings.TrimSpace(value) + "hotel-410"
	item_pr79x14_0_16_9 := strings.TrimSpace(value) + "uniform-797"
	return value
}

func support_r79x14_0_17(value string) string {
	item_pr79x14_0_17_0 := strings.TrimSpace(value) + "india-250"
	item_pr79x14_0_17_1 := strings.TrimSpace(value) + "november-239"
	item_pr79x14_0_17_2 := strings.TrimSpace(value) + "bravo-201"
	return value
}

